import os
import subprocess
import sys

import numpy as np
import pytest

from endograph import _kernels
from endograph._kernels import _pykernels
from endograph.catalog import catalog_groups_up_to
from endograph.groups import AbelianShape, hom_plan, make_abelian, minimal_generating_set
from endograph.morphisms import _dividing_candidates, _equal_order_candidates

try:
    from endograph._kernels import _ckernels
except ImportError:
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernel not built")


def _search(mod, g, pick, injective=False, limit=0):
    gens = minimal_generating_set(g)
    plan = hom_plan(g, gens)
    return mod.search_homs(g.table, g.table, plan.seq, plan.parent, plan.pgen, plan.level_end,
                           plan.gens, [pick(g, s) for s in gens], injective, limit)


FLEET = catalog_groups_up_to(15) + [make_abelian(AbelianShape.from_moduli([2, 2, 2, 2]))]


@needs_c
@pytest.mark.parametrize("g", FLEET, ids=lambda g: g.name)
def test_backends_agree(g):
    for pick, inj in ((_dividing_candidates, False), (_equal_order_candidates, True)):
        a = _search(_pykernels, g, pick, inj)
        b = _search(_ckernels, g, pick, inj)
        assert a.dtype == b.dtype == np.int32
        assert np.array_equal(a, b)


@needs_c
def test_limit_respected():
    g = FLEET[-1]
    assert len(_search(_ckernels, g, _dividing_candidates, limit=5)) == 5
    assert len(_search(_pykernels, g, _dividing_candidates, limit=5)) == 5


def test_empty_candidates():
    g = catalog_groups_up_to(4)[-1]
    gens = minimal_generating_set(g)
    plan = hom_plan(g, gens)
    out = _kernels.search_homs(g.table, g.table, plan.seq, plan.parent, plan.pgen,
                               plan.level_end, plan.gens, [[] for _ in gens], False, 0)
    assert out.shape == (0, g.order)


def test_env_forces_fallback():
    env = dict(os.environ, ENDOGRAPH_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import endograph; print(endograph.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
