# Command Layer - acceptance criteria as commands
