from .continuation_evaluator import ContinuationEvaluator
