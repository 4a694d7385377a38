import doctest

import cycliso.cycle
import cycliso.orientation
import cycliso.partial_perm


def test_module_doctests():
    for mod in (cycliso.partial_perm, cycliso.cycle, cycliso.orientation):
        # verbose defaults to ("-v" in sys.argv), which pytest -v would trip
        result = doctest.testmod(mod, verbose=False)
        assert result.failed == 0, mod.__name__
        assert result.attempted > 0, mod.__name__
