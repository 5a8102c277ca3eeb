from .small_z_series_evaluator import SmallZSeriesEvaluator
