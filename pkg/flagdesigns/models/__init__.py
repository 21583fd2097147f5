from flagdesigns.models.field_spec import FieldSpec
from flagdesigns.models.psl2_context import Psl2Context
from flagdesigns.models.subgroup_spec import SubgroupKind, SubgroupSpec
from flagdesigns.models.orbit_profile import OrbitProfile
from flagdesigns.models.design_params import ChainEntry, DesignParams
from flagdesigns.models.incidence import IncidenceStructure
from flagdesigns.models.flag import Flag
from flagdesigns.models.verdict import Verdict
from flagdesigns.models.family_case import FamilyTag, GroupFamilyCase
from flagdesigns.models.hypothesis import EquationVariant, StabilizerHypothesis
from flagdesigns.models.report_entry import ReportEntry, VerdictKind
from flagdesigns.models.elimination_report import ENTRIES_ADAPTER, EliminationReport
from flagdesigns.models.qrcode_spec import QRCodeSpec
from flagdesigns.models.mathieu_data import MathieuData
from flagdesigns.models.limits import DEFAULT_SEED, Limits
from flagdesigns.models.cli_config import SCAN_FAMILIES, CliConfig, Subcommand
from flagdesigns.models.solve_result import SolveResult
