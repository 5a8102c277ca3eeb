from lognormal_laplace.cli.commands.density import run_density
from lognormal_laplace.cli.commands.evaluate import run_eval
from lognormal_laplace.cli.commands.leipnik_demo import run_leipnik_demo
from lognormal_laplace.cli.commands.table import run_table
from lognormal_laplace.cli.commands.thorin import run_thorin
from lognormal_laplace.models.records import Subcommand

COMMANDS = {
    Subcommand.eval: run_eval,
    Subcommand.table: run_table,
    Subcommand.density: run_density,
    Subcommand.thorin: run_thorin,
    Subcommand.leipnik_demo: run_leipnik_demo,
}
