"""
CLI commands subpackage.

Re-exports all command handlers for use by main.py.
"""

from bettistack.cli.commands.betti import cmd_betti
from bettistack.cli.commands.cone import cmd_cone
from bettistack.cli.commands.family import cmd_family
from bettistack.cli.commands.lex import cmd_lex
from bettistack.cli.commands.search import cmd_search
from bettistack.cli.commands.verify import (
    cmd_verify_betti_family,
    cmd_verify_coning,
    cmd_verify_cycle,
    cmd_verify_family,
    cmd_verify_golden,
    cmd_verify_path,
    cmd_verify_single_degree,
    cmd_verify_total_order,
    cmd_verify_witness,
)

__all__ = [
    "cmd_betti",
    "cmd_cone",
    "cmd_family",
    "cmd_lex",
    "cmd_search",
    # verify
    "cmd_verify_golden",
    "cmd_verify_path",
    "cmd_verify_cycle",
    "cmd_verify_family",
    "cmd_verify_single_degree",
    "cmd_verify_total_order",
    "cmd_verify_coning",
    "cmd_verify_witness",
    "cmd_verify_betti_family",
]
