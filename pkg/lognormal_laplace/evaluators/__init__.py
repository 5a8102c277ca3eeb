from typing import TypeVar

from lognormal_laplace.config.evaluators import EvaluatorsConfig
from lognormal_laplace.evaluators.base_evaluator import BaseEvaluator

T = TypeVar("T")


class EvaluatorRegistry:
    def __init__(self, *evaluators: BaseEvaluator, aliases: EvaluatorsConfig = None):
        self.evaluator_by_name = {
            evaluator.EVALUATOR_NAME: evaluator for evaluator in evaluators
        }
        self.aliases = aliases or EvaluatorsConfig()

    def __getitem__(self, selector: str) -> BaseEvaluator:
        return self.evaluator_by_name[self.aliases.resolve(selector)]

    def __contains__(self, selector: str) -> bool:
        return self.get(selector) is not None

    def __iter__(self):
        return iter(self.evaluator_by_name.values())

    def get(self, selector: str, default: T = None) -> BaseEvaluator | T:
        try:
            return self[selector]
        except KeyError:
            return default

    def names(self) -> list[str]:
        return list(self.evaluator_by_name)
