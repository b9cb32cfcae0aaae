# pipeline/__init__.py

# Report & config
from .config import MIN_DEGREE_BOUND, PRESENTATION_BOUND, PipelineConfig
from .report import Report, ReportItem

# Commands
from .chow import cmd_chow
from .commands import cmd_cycle_map, cmd_gr_gamma, cmd_group_info, cmd_table, parse_choice
from .detect import cmd_detect
from .verify import cmd_verify
