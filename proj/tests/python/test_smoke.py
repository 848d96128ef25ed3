# Copyright 2026 The d2dsel Authors
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
import os

import pytest

import d2dsel


def test_reference_config_round_trip():
    cfg = d2dsel.SystemConfig.reference()
    again = d2dsel.SystemConfig.from_json(cfg.to_json())
    assert again.p_c == cfg.p_c
    assert again.n_pairs == 2
    assert cfg.mean_gain(1) == pytest.approx(30.0**-3)


def test_load_shipped_config():
    path = os.environ.get("D2DSEL_CONFIG")
    if not path:
        pytest.skip("D2DSEL_CONFIG not set")
    cfg = d2dsel.SystemConfig.load(path)
    assert cfg.p_c == pytest.approx(0.01)
    assert cfg.sigma2 == pytest.approx(1e-12)


def test_invalid_config_raises_value_error():
    cfg = d2dsel.SystemConfig.reference()
    cfg.alpha = 1.0
    with pytest.raises(ValueError, match="alpha"):
        cfg.validate()


def test_channels_are_reproducible():
    cfg = d2dsel.SystemConfig.reference()
    a = d2dsel.draw_channels(cfg, 7, 3)
    b = d2dsel.draw_channels(cfg, 7, 3)
    assert a == b
    assert len(a) == cfg.n_pairs and all(len(row) == 4 for row in a)
    assert all(g > 0 for row in a for g in row)


def test_strong_channel_is_case_two():
    cfg = d2dsel.SystemConfig.reference()
    out = d2dsel.select_and_classify([[1.0, 1.0, 1.0, 1.0]], cfg)
    assert out.operating_case == d2dsel.OperatingCase.Case2
    assert out.selected == 0
    assert out.decoding_set == [0]


def test_dead_channel_is_case_one():
    cfg = d2dsel.SystemConfig.reference()
    result = d2dsel.run_trial([[1e-20, 1e-20, 1e-20, 1e-20]] * 2, cfg)
    assert result.outcome.operating_case == d2dsel.OperatingCase.Case1
    assert result.cellular_outage and result.d2d_outage


def test_bessel_k1_known_value():
    assert d2dsel.bessel_k1(1.0) == pytest.approx(0.6019072301972346, rel=1e-14)


def test_analytic_bounds_and_saturation():
    cfg = d2dsel.SystemConfig.reference()
    cellular, _ = d2dsel.alpha_bounds(cfg)
    assert cellular == pytest.approx(0.5)
    cfg.alpha = 0.6
    assert d2dsel.cellular_outage(cfg) == 1.0
    assert d2dsel.cellular_outage(cfg, d2dsel.CellularVariant.Literal) == 1.0


def test_estimate_matches_corrected_form():
    cfg = d2dsel.SystemConfig.reference()
    est = d2dsel.estimate_outage(cfg, 200_000, 11)
    analytic = d2dsel.cellular_outage(cfg)
    se = math.sqrt(analytic * (1 - analytic) / est.trials)
    assert abs(est.p_oc_hat - analytic) <= 3 * se
    assert sum(est.case_histogram) == est.trials


def test_estimate_independent_of_workers():
    cfg = d2dsel.SystemConfig.reference()
    assert d2dsel.estimate_outage(cfg, 20_000, 5, 1) == d2dsel.estimate_outage(cfg, 20_000, 5, 4)


def test_sweep_marks_bad_points():
    cfg = d2dsel.SystemConfig.reference()
    points = d2dsel.sweep(cfg, "n_pairs", [1, 2.5, 3], 1000, 9)
    assert [p.ok for p in points] == [True, False, True]
    assert points[0].seed == d2dsel.point_seed(9, 0)
    with pytest.raises(ValueError):
        d2dsel.sweep(cfg, "gamma", [0.1], 10, 1)
