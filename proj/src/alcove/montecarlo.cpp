#include "alcove/montecarlo.hpp"

#include "alcove/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace alcove {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr long long kChunk = 4096; // paths per reduction chunk

struct GaussStream {
    std::uint64_t state;
    double spare = 0.0;
    bool have_spare = false;

    explicit GaussStream(std::uint64_t s) : state(s) {}

    double next() {
        if (have_spare) {
            have_spare = false;
            return spare;
        }
        const double u1 = 1.0 - uniform01(state); // (0, 1]: keeps log finite
        const double u2 = uniform01(state);
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = kTwoPi * u2;
        spare = r * std::sin(a);
        have_spare = true;
        return r * std::cos(a);
    }
};

struct ChunkStats {
    double sum = 0.0;
    double sumsq = 0.0;
    long long exited = 0;
};

void validate_cfg(const SimConfig& cfg) {
    if (cfg.paths < 1) throw invalid_input("need at least one path");
    if (!(cfg.dt > 0.0)) throw invalid_input("dt must be positive");
    if (!(cfg.dt < cfg.horizon)) throw invalid_input("dt must be below the horizon");
}

int resolve_workers(const SimConfig& cfg, long long chunks) {
    int w = cfg.workers;
    if (w <= 0) w = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    w = std::min(w, 32);
    w = static_cast<int>(std::min<long long>(w, chunks));
    return std::max(w, 1);
}

// Runs `path_fn(path_index, value_out) -> exited` over all paths in fixed
// chunks, in parallel, and merges the per-chunk statistics in chunk order.
// The merge order and per-chunk accumulation order are independent of the
// worker count, so the result is bit-identical for any `workers`.
MCEstimate run_paths(const SimConfig& cfg,
                     const std::function<bool(long long, double&)>& path_fn) {
    const long long n = cfg.paths;
    const long long chunks = (n + kChunk - 1) / kChunk;
    std::vector<ChunkStats> stats(static_cast<size_t>(chunks));

    auto run_chunk = [&](long long c) {
        ChunkStats s;
        const long long lo = c * kChunk;
        const long long hi = std::min(n, lo + kChunk);
        for (long long p = lo; p < hi; ++p) {
            double v = 0.0;
            if (path_fn(p, v)) ++s.exited;
            s.sum += v;
            s.sumsq += v * v;
        }
        stats[static_cast<size_t>(c)] = s;
    };

    const int workers = resolve_workers(cfg, chunks);
    if (workers == 1) {
        for (long long c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::atomic<long long> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (long long c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
                    run_chunk(c);
            });
        for (auto& th : pool) th.join();
    }

    double sum = 0.0, sumsq = 0.0;
    long long exited = 0;
    for (const ChunkStats& s : stats) {
        sum += s.sum;
        sumsq += s.sumsq;
        exited += s.exited;
    }

    MCEstimate est;
    est.paths = n;
    est.mean = sum / static_cast<double>(n);
    if (n > 1) {
        const double var =
            std::max(0.0, (sumsq - static_cast<double>(n) * est.mean * est.mean) /
                              static_cast<double>(n - 1));
        est.std_error = std::sqrt(var / static_cast<double>(n));
    }
    est.exited_fraction = static_cast<double>(exited) / static_cast<double>(n);
    return est;
}

long long steps_through(double t, double dt) {
    return static_cast<long long>(std::floor(t / dt + 1e-9));
}

// Shared survival walk: ambient Euler steps, exit at the first grid point
// outside the (optionally w-rotated) alcove.
MCEstimate survival_walk(const RootDatum& d, const Mat* w, const Vec& x, double t,
                         const SimConfig& cfg) {
    validate_cfg(cfg);
    if (!(t >= 0.0)) throw invalid_input("time must be nonnegative");
    if (!(t <= cfg.horizon)) throw invalid_input("time exceeds the horizon");
    if (!in_alcove(d, x)) throw invalid_input("start point is outside the open alcove");
    if (w && (w->n != d.ambient))
        throw invalid_input("frame dimension does not match the ambient space");

    const long long nsteps = steps_through(t, cfg.dt);
    const double sdt = std::sqrt(cfg.dt);
    const int dim = d.ambient;
    const Vec x0 = w ? matvec(*w, x) : x;
    const Mat wt = w ? transpose(*w) : Mat{};

    auto path_fn = [&](long long path, double& value) {
        GaussStream g(path_stream_seed(cfg.seed, static_cast<std::uint64_t>(path)));
        Vec pos = x0;
        Vec back(static_cast<size_t>(dim));
        for (long long s = 0; s < nsteps; ++s) {
            for (int i = 0; i < dim; ++i) pos[static_cast<size_t>(i)] += sdt * g.next();
            const Vec& probe = w ? (back = matvec(wt, pos)) : pos;
            if (!in_alcove(d, probe)) {
                value = 0.0;
                return true;
            }
        }
        value = 1.0;
        return false;
    };
    return run_paths(cfg, path_fn);
}

} // namespace

std::uint64_t path_stream_seed(std::uint64_t seed, std::uint64_t path) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (path + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

MCEstimate mc_survival(const RootDatum& d, const Vec& x, double t, const SimConfig& cfg) {
    return survival_walk(d, nullptr, x, t, cfg);
}

MCEstimate mc_survival_frame(const RootDatum& d, const Mat& w, const Vec& x, double t,
                             const SimConfig& cfg) {
    return survival_walk(d, &w, x, t, cfg);
}

MCEstimate mc_expected_exit(const RootDatum& d, const Vec& x, const SimConfig& cfg) {
    validate_cfg(cfg);
    if (!in_alcove(d, x)) throw invalid_input("start point is outside the open alcove");

    const long long nmax = std::max<long long>(1, steps_through(cfg.horizon, cfg.dt));
    const double sdt = std::sqrt(cfg.dt);
    const int dim = d.ambient;

    auto path_fn = [&](long long path, double& value) {
        GaussStream g(path_stream_seed(cfg.seed, static_cast<std::uint64_t>(path)));
        Vec pos = x;
        for (long long s = 1; s <= nmax; ++s) {
            for (int i = 0; i < dim; ++i) pos[static_cast<size_t>(i)] += sdt * g.next();
            if (!in_alcove(d, pos)) {
                value = static_cast<double>(s) * cfg.dt;
                return true;
            }
        }
        value = cfg.horizon; // censored
        return false;
    };
    return run_paths(cfg, path_fn);
}

MCEstimate mc_strip_survival(double u, double t, const SimConfig& cfg) {
    validate_cfg(cfg);
    if (!(t >= 0.0)) throw invalid_input("time must be nonnegative");
    if (!(t <= cfg.horizon)) throw invalid_input("time exceeds the horizon");
    if (!(u > 0.0 && u < 1.0)) throw invalid_input("start must be inside (0,1)");

    const long long nsteps = steps_through(t, cfg.dt);
    const double sdt = std::sqrt(cfg.dt);

    auto path_fn = [&](long long path, double& value) {
        GaussStream g(path_stream_seed(cfg.seed, static_cast<std::uint64_t>(path)));
        double y = u;
        for (long long s = 0; s < nsteps; ++s) {
            y += sdt * g.next();
            if (!(y > 0.0 && y < 1.0)) {
                value = 0.0;
                return true;
            }
        }
        value = 1.0;
        return false;
    };
    return run_paths(cfg, path_fn);
}

MCEstimate mc_circle_collision(int k, const std::vector<double>& x, double t,
                               const SimConfig& cfg) {
    validate_cfg(cfg);
    if (!(t >= 0.0)) throw invalid_input("time must be nonnegative");
    if (!(t <= cfg.horizon)) throw invalid_input("time exceeds the horizon");
    if (k < 2) throw invalid_input("need at least two walks");
    if (static_cast<int>(x.size()) != k)
        throw invalid_input("start dimension does not match the walk count");
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const double f = x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)];
            if (std::abs(f - std::round(f)) < 1e-9)
                throw invalid_input("starts must be distinct mod 1");
        }

    const long long nsteps = steps_through(t, cfg.dt);
    const double sdt = std::sqrt(cfg.dt);
    const int pairs = k * (k - 1) / 2;
    std::vector<long long> floor0(static_cast<size_t>(pairs));
    {
        int q = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                floor0[static_cast<size_t>(q++)] = static_cast<long long>(
                    std::floor(x[static_cast<size_t>(i)] - x[static_cast<size_t>(j)]));
    }

    auto path_fn = [&](long long path, double& value) {
        GaussStream g(path_stream_seed(cfg.seed, static_cast<std::uint64_t>(path)));
        std::vector<double> pos = x;
        for (long long s = 0; s < nsteps; ++s) {
            for (int i = 0; i < k; ++i) pos[static_cast<size_t>(i)] += sdt * g.next();
            int q = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    const double diff = pos[static_cast<size_t>(i)] - pos[static_cast<size_t>(j)];
                    if (static_cast<long long>(std::floor(diff)) !=
                        floor0[static_cast<size_t>(q)]) {
                        value = 0.0;
                        return true;
                    }
                    ++q;
                }
        }
        value = 1.0;
        return false;
    };
    return run_paths(cfg, path_fn);
}

Vec circle_alcove_representative(int k, const std::vector<double>& x) {
    if (k < 2 || static_cast<int>(x.size()) != k)
        throw invalid_input("need k >= 2 matching coordinates");
    Vec rep(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double v = x[static_cast<size_t>(i)];
        rep[static_cast<size_t>(i)] = v - std::floor(v);
    }
    std::sort(rep.begin(), rep.end(), std::greater<double>());
    double mean = 0.0;
    for (double v : rep) mean += v;
    mean /= static_cast<double>(k);
    for (double& v : rep) v -= mean;
    return rep;
}

} // namespace alcove
