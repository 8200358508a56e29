"""aspsmt: ground answer set programs -> SMT-LIB2 -> answer set enumeration.

Parse an smodels-format program (optionally with linear-constraint bindings),
translate completion plus level-ranking formulas to SMT-LIB2, and enumerate
answer sets through any file-based SMT solver.
"""

from .dependency import (DependencyInfo, compute_dependency, is_tight,
                         ranking_upper_bound)
from .enumeration import (AnswerSet, EnumerationResult, Translation,
                          blocking_assertion, enumerate_answer_sets, translate)
from .errors import AspSmtError
from .oracle import (brute_force_answer_sets, brute_force_completion_models,
                     find_level_ranking, gl_reduct, least_model)
from .program import (Atom, Program, Rule, eliminate_choice_rules,
                      parse_smodels, serialize_smodels)
from .smt_emit import EmissionUnit, emit_smtlib
from .solver import SatResult, default_solver_command, parse_value_response, solve
from .theory import TheoryDecls, parse_theory_declarations, theory_formulas

__version__ = "0.1.0"

__all__ = [
    "AnswerSet", "AspSmtError", "Atom", "DependencyInfo", "EmissionUnit",
    "EnumerationResult", "Program", "Rule", "SatResult", "TheoryDecls",
    "Translation", "blocking_assertion", "brute_force_answer_sets",
    "brute_force_completion_models", "compute_dependency",
    "default_solver_command", "eliminate_choice_rules", "emit_smtlib",
    "enumerate_answer_sets", "find_level_ranking", "gl_reduct", "is_tight",
    "least_model", "parse_smodels", "parse_theory_declarations",
    "parse_value_response", "ranking_upper_bound", "serialize_smodels",
    "solve", "theory_formulas", "translate",
]
