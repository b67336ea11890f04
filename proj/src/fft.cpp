// Copyright 2026 The qphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "qphase/error.hpp"
#include "qphase/kernels.hpp"

namespace qphase::detail {
namespace {

class PlanCache {
  public:
    ~PlanCache() {
        for (auto &[key, plan] : plans_) fftw_destroy_plan(plan);
    }

    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(n, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        // The planner is not reentrant; execution with new arrays is.
        auto *buffer = fftw_alloc_complex(n);
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buffer, buffer, sign,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buffer);
        if (plan == nullptr) fail(ErrorCategory::resource, "FFTW could not create a plan");
        plans_.emplace(key, plan);
        return plan;
    }

  private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache &plan_cache() {
    static PlanCache cache;
    return cache;
}

}  // namespace

void fft_inplace(cplx *data, std::size_t n, Direction direction) {
    if (n <= 1) return;
    const int sign = direction == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD;
    fftw_plan plan = plan_cache().get(n, sign);
    auto *p = reinterpret_cast<fftw_complex *>(data);
    fftw_execute_dft(plan, p, p);
}

cplx exp_i_pi_ratio(long long k, long long m) {
    const long long period = 2 * m;
    long long r = k % period;
    if (r < 0) r += period;
    if (r == 0) return {1.0, 0.0};
    if (2 * r == period) return {-1.0, 0.0};
    const double angle = std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

const D4Filter &d4_filter() {
    static const D4Filter filter = [] {
        const double s3 = std::sqrt(3.0);
        const double norm = 4.0 * std::numbers::sqrt2;
        D4Filter f{};
        f.h[0] = (1.0 + s3) / norm;
        f.h[1] = (3.0 + s3) / norm;
        f.h[2] = (3.0 - s3) / norm;
        f.h[3] = (1.0 - s3) / norm;
        f.g[0] = f.h[3];
        f.g[1] = -f.h[2];
        f.g[2] = f.h[1];
        f.g[3] = -f.h[0];
        const double sum = f.h[0] + f.h[1] + f.h[2] + f.h[3];
        const double alt = f.h[0] - f.h[1] + f.h[2] - f.h[3];
        if (std::abs(sum - std::numbers::sqrt2) > 1e-15 || std::abs(alt) > 1e-15) {
            fail(ErrorCategory::invariant_violation, "D4 filter identities do not hold");
        }
        return f;
    }();
    return filter;
}

}  // namespace qphase::detail
