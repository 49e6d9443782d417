"""The command line and the builtin corpus of topochains."""

__title__ = 'cli'
__license__ = 'MIT'

from .corpus import (
    CorpusEntry,
    CORPUS,
    corpus_names,
    corpus_space
)
from .commands import (
    build_parser,
    main,
    load_space,
    load_map,
    load_module,
    EXIT_OK,
    EXIT_REJECTED,
    EXIT_MALFORMED
)
