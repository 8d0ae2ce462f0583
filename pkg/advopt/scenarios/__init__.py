from .scenario_report import ScenarioReport, reports_frame
from .counterexample import counterexample_check
from .hruskova import hruskova_scenario
from .covering_radius import covering_radius
from .consistency import consistency_suite
from .run_all import run_all, covering_radius_report
