from flagdesigns.classifier.tables import citations, family_cases, family_rank, known_nonexistent
from flagdesigns.classifier.solver import equation_consequences, equation_holds, solve_for_subgroup, solve_q
from flagdesigns.classifier.psl2_scan import psl2_case_scan, scan_q
from flagdesigns.classifier.families import *
from flagdesigns.classifier.runner import (
    EXPECTED_SURVIVORS,
    matches_main_theorem,
    run_classification,
    run_family,
)
