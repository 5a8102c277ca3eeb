from .direct_evaluator import DirectEvaluator
