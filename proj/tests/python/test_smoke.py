# Copyright 2026 The fermisched Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import pytest

import fermisched


def test_two_point_complete_graph():
    s = fermisched.schedule_two_point(modes=6)
    assert s["n_modes"] == 6
    assert len(s["settings"]) == 11


def test_two_point_edge_list():
    s = fermisched.schedule_two_point(edges=[(1, 2), (2, 3)])
    assert len(s["settings"]) == 5
    with pytest.raises(ValueError):
        fermisched.schedule_two_point(modes=3, edges=[(1, 2)])


def test_exact_four_point():
    s = fermisched.schedule_four_point(4)
    assert len(s["settings"]) == 20
    assert s["metadata"]["status"] == "optimal"
    report = fermisched.verify(s, trials=3, seed=1)
    assert report["passed"], report["failures"]
    assert report["max_error"] < 1e-9


def test_heuristic_is_seeded():
    a = fermisched.schedule_four_point(5, method="heuristic", restarts=4, seed=3)
    b = fermisched.schedule_four_point(5, method="heuristic", restarts=4, seed=3)
    assert a == b
    assert len(a["settings"]) >= 51


def test_reference_and_sampled_verify():
    s = fermisched.reference_schedule(6)
    assert len(s["settings"]) == 76
    assert fermisched.verify(s, trials=2, shots=4000, seed=5)["passed"]


def test_corrupted_schedule_fails():
    s = fermisched.schedule_four_point(3)
    s["reconstruction"][0]["terms"][0]["coeff_re"] = 0.5
    assert not fermisched.verify(s, trials=2)["passed"]


def test_lattice_tiling():
    s = fermisched.schedule_lattice("square", 6, 6)
    assert len(s["settings"]) == 80
    with pytest.raises(ValueError):
        fermisched.schedule_lattice("cubic", 4, 4)


def test_cover_stats():
    stats = fermisched.cover_stats(4)
    assert stats["maximal_cliques"] == 25
    assert stats["target_edges"] == 38
    assert stats["lower_bound"] == 20


def test_lp_export_solves_to_the_optimum():
    highspy = pytest.importorskip("highspy")
    import os
    import tempfile

    text = fermisched.export_ilp(3)
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "model.lp")
        with open(path, "w") as f:
            f.write(text)
        h = highspy.Highs()
        h.setOptionValue("output_flag", False)
        h.readModel(path)
        h.run()
        assert round(h.getInfo().objective_function_value) == 7
    with pytest.raises(ValueError):
        fermisched.export_ilp(3, model="clique-search")
