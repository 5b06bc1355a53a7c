"""Order-5 completely inverse AG**-groupoids; about a minute, opt-in via AGMAGMA_SLOW=1."""
import os

import pytest

from agmagma import congruences as cg
from agmagma.enumeration import ModelQuery, enumerate_models
from agmagma.laws import ClassLabel

from claims import cor4_failures, cor56_failures, lallement_failures, prop2_failures

pytestmark = [
    pytest.mark.slow,
    pytest.mark.skipif(not os.environ.get("AGMAGMA_SLOW"), reason="set AGMAGMA_SLOW=1"),
]


def test_claims_on_order5():
    models = list(enumerate_models(ModelQuery(5, ClassLabel.COMPLETELY_INVERSE_AG_SS, up_to_iso=True)))
    assert models
    for m in models:
        congs = cg.all_congruences(m)
        assert prop2_failures(m) == []
        assert lallement_failures(m, congs) == []
        assert cor4_failures(m, congs) == []
        assert cor56_failures(m, congs) == []
