from .sigma_asymptotic_evaluator import SigmaAsymptoticEvaluator
