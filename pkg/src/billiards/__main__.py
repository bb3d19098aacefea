from billiards.cli import run

run()
