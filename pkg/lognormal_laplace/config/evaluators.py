import os
from pathlib import Path

import ujson


class EvaluatorsConfig:
    def __init__(self) -> None:
        self._aliases = {}
        for path, _, files in os.walk(Path(__file__).parent.parent / 'evaluators'):
            for file in files:
                if 'config.json' == file:
                    with open(Path(path, file)) as f:
                        evaluator_config = ujson.load(f)
                        if not evaluator_config.get('enabled'):
                            continue
                        name = evaluator_config['name']
                        self.__dict__[name] = evaluator_config
                        self._aliases[name] = name
                        for alias in evaluator_config['aliases']:
                            self._aliases[alias] = name

    def __iter__(self):
        return iter(self.keys())

    def __getitem__(self, name: str) -> dict:
        return self.__dict__[self.resolve(name)]

    def items(self):
        return ((k, v) for k, v in self.__dict__.items() if not k.startswith('_'))

    def keys(self):
        return [k for k, _ in self.items()]

    def values(self):
        return [v for _, v in self.items()]

    def resolve(self, name_or_alias: str) -> str:
        """Maps a CLI method selector to the evaluator name."""
        try:
            return self._aliases[name_or_alias]
        except KeyError:
            raise KeyError(
                f'Unknown method {name_or_alias!r}, expected one of {sorted(self._aliases)}'
            ) from None

    def selectors(self) -> list[str]:
        return sorted(self._aliases)
