from .run_survey import cmd_survey, parse_args as parse_survey_args
from .evaluate_state import cmd_evaluate, evaluate_state
from .main import main
