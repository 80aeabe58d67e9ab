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

"""Measurement-induced nonlocality for qubit registers.

Closed forms for 2 x n states and pure states, an independent brute-force
oracle, monogamy reports, and seeded Monte Carlo campaigns over the three-
and four-qubit state classes. Everything is implemented in the C++ core;
this package re-exports the bound surface.
"""

from minlab._core import (  # noqa: F401
    BoundReport,
    CampaignStats,
    DensityMatrix,
    Histogram,
    MinResult,
    MonogamyReport,
    PureState,
    TangleSummary,
    __version__,
    acin_state,
    bell_state,
    export_stats,
    generic4_state,
    generic_basis_vector,
    gghz_state,
    import_stats_json,
    min3_closed,
    min4_closed,
    min_2xn,
    min_bruteforce,
    min_pure,
    monogamy_report,
    partial_trace,
    reduced_density,
    run_campaign,
    sample,
    schmidt_spectrum,
    special_state,
    tangle,
    tangle_summary,
    verify_bounds,
    w_state,
    wilson95,
)
