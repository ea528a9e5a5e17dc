import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qden.technology import builtin_nodes


@pytest.fixture(scope="session")
def nodes_by_name():
    return {node.name: node for node in builtin_nodes()}
