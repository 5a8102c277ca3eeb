from .mellin_barnes_evaluator import MellinBarnesEvaluator
