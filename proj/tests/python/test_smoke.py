# Copyright 2026 minlab contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import minlab


S2 = 1.0 / math.sqrt(2.0)


def test_bell_min_is_half():
    bell = minlab.bell_state()
    result = minlab.min_pure(bell, [0])
    assert result.branch == "pure"
    assert abs(result.value - 0.5) < 1e-12

    rho = minlab.DensityMatrix.from_pure(bell)
    closed = minlab.min_2xn(rho)
    assert closed.branch == "x_zero"
    assert abs(closed.value - 0.5) < 1e-12


def test_ghz4_is_polygamous():
    rep = minlab.monogamy_report(minlab.gghz_state(4, S2, S2), 0)
    assert not rep.monogamous
    assert abs(rep.deficit + 0.25) < 1e-12
    assert all(abs(v - 0.25) < 1e-12 for _, v in rep.pairwise)


def test_w_state_equality():
    s3 = 1.0 / math.sqrt(3.0)
    rep = minlab.monogamy_report(minlab.w_state([s3, s3, s3]), 0)
    assert rep.monogamous
    assert abs(rep.deficit) < 1e-12
    assert abs(rep.global_min - 4.0 / 9.0) < 1e-12


def test_closed_forms_match_pipeline():
    psi = minlab.sample("generic4", seed=3, index=11)
    rho_ab = minlab.reduced_density(psi, [0, 1])
    z = [complex(a) for a in (0.5, 0.5j, 0.5, -0.5j)]
    closed = minlab.min4_closed(z, "AC")
    generic = minlab.min_2xn(minlab.reduced_density(minlab.generic4_state(z), [0, 2]))
    assert abs(closed.value - generic.value) < 1e-9
    assert minlab.min_2xn(rho_ab).value >= 0.0


def test_oracle_agrees_on_bell():
    rho = minlab.DensityMatrix.from_pure(minlab.bell_state())
    oracle = minlab.min_bruteforce(rho, grid_points=4000)
    assert abs(oracle.value - 0.5) < 1e-5


def test_tangle_summary_class_m():
    summary = minlab.tangle_summary(minlab.sample("class_M", seed=5, index=0))
    assert abs(summary.tau1 - 1.0) < 1e-10
    assert abs(summary.tau2 - 4.0 / 3.0) < 1e-10
    assert abs(summary.tau_abcd) < 1e-10


def test_campaign_determinism_and_export(tmp_path):
    one = minlab.run_campaign("wclass3", seed=7, samples=500, workers=1)
    four = minlab.run_campaign("wclass3", seed=7, samples=500, workers=4)
    assert one == four

    out1 = tmp_path / "w1.json"
    out4 = tmp_path / "w4.json"
    minlab.export_stats(one, "json", str(out1))
    minlab.export_stats(four, "json", str(out4))
    assert out1.read_bytes() == out4.read_bytes()

    loaded = minlab.import_stats_json(str(out1))
    assert loaded == one


def test_verify_bounds_thm4():
    report = minlab.verify_bounds("M_thm4", samples=300, seed=1)
    assert report.pass_
    assert report.max_observed <= 0.25 + 1e-9


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        minlab.acin_state([1.0, 1.0, 0.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        minlab.sample("not_a_family", seed=0, index=0)
