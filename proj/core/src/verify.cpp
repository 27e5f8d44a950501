#include <fatpoints/verify.hpp>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <utility>

namespace fatpoints::verify {

namespace {

Rational ratio_of(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

SweepRow sweep_cell(unsigned n, std::uint64_t s, std::uint64_t m) {
  const Instance inst{n, BigInt(static_cast<unsigned long>(s)),
                      BigInt(static_cast<unsigned long>(m))};
  SweepRow row;
  row.n = n;
  row.s = s;
  row.m = m;
  row.condition_holds = bounds::demailly_condition(inst);
  row.sufficient_holds = bounds::sufficient_condition(inst);
  row.factor_ok = true;
  for (unsigned i = 0; i <= (n - 1) / 2; ++i) {
    if (!bounds::factor_inequality(inst, i)) {
      row.factor_ok = false;
      break;
    }
  }
  row.mss_class = bounds::compare_mss(inst);
  row.violation = row.condition_holds && !(row.sufficient_holds && row.factor_ok);
  return row;
}

}  // namespace

ExperimentReport run_instance(const interpolation::PointSet& points,
                              unsigned m, unsigned cap) {
  const unsigned n = points.n;
  const BigInt s(static_cast<unsigned long>(points.points.size()));
  const Instance inst{n, s, BigInt(m)};
  bounds::validate(inst);

  ExperimentReport report;
  report.instance = inst;
  report.prime = points.prime;

  const unsigned use_cap =
      cap != 0 ? cap : interpolation::default_degree_cap(n, s, m);
  report.alpha = interpolation::alpha_of(points, m, use_cap).alpha;

  report.delta = bounds::delta_bound(inst);
  const bounds::RootData rd = bounds::root_data(s, n);
  const BigInt t = inst.m + n - 1;
  report.demailly_ratio = ratio_of(BigInt(report.alpha) + (n - 1), t);
  report.thm_a_ok = BigInt(report.alpha) <= report.delta;
  report.ratio_le_k = BigInt(report.alpha) + (n - 1) <= rd.k * t;
  if (n >= 2) {
    report.k_bound = bounds::k_bound(inst);
    report.condition_holds = bounds::demailly_condition(inst);
    if (*report.condition_holds) {
      report.thm_b_ok = BigInt(report.alpha) <= *report.k_bound;
    }
  }

  if (!report.thm_a_ok) {
    std::ostringstream msg;
    msg << "unconditional bound violated: alpha = " << report.alpha
        << " exceeds delta = " << report.delta.get_str() << " at n = " << n
        << ", s = " << s.get_str() << ", m = " << m << ", prime = "
        << points.prime << " — this indicates a software bug, not a finding";
    throw SoftwareFault(msg.str());
  }
  return report;
}

ExperimentReport run_instance(unsigned n, const BigInt& s, unsigned m,
                              const interpolation::PrimeModulus& prime,
                              std::uint64_t seed, unsigned cap) {
  const auto points = interpolation::sample_points(n, s, prime, seed);
  ExperimentReport report = run_instance(points, m, cap);
  report.seed = seed;
  return report;
}

InvariantReport invariant_suite(const interpolation::PointSet& points,
                                unsigned max_mult, unsigned cap) {
  if (max_mult < 2) {
    throw std::invalid_argument("invariant_suite: max_mult must be >= 2");
  }
  const BigInt s(static_cast<unsigned long>(points.points.size()));
  InvariantReport report;

  for (unsigned m = 1; m <= max_mult; ++m) {
    const unsigned use_cap =
        cap != 0 ? cap : interpolation::default_degree_cap(points.n, s, m);
    report.alphas.push_back(interpolation::alpha_of(points, m, use_cap).alpha);
  }
  const auto alpha = [&](unsigned m) { return report.alphas[m - 1]; };
  const auto fail = [&](std::string why) {
    if (report.pass) {
      report.pass = false;
      report.first_failure = std::move(why);
    }
  };

  for (unsigned m = 1; m + 1 <= max_mult && report.pass; ++m) {
    if (alpha(m + 1) < alpha(m)) {
      fail("monotonicity: alpha(" + std::to_string(m + 1) + ") = " +
           std::to_string(alpha(m + 1)) + " < alpha(" + std::to_string(m) +
           ") = " + std::to_string(alpha(m)));
    }
  }
  for (unsigned a = 1; a <= max_mult && report.pass; ++a) {
    for (unsigned b = a; a + b <= max_mult && report.pass; ++b) {
      if (alpha(a + b) > alpha(a) + alpha(b)) {
        fail("subadditivity: alpha(" + std::to_string(a + b) + ") > alpha(" +
             std::to_string(a) + ") + alpha(" + std::to_string(b) + ")");
      }
    }
  }
  for (unsigned m = 1; m <= max_mult && report.pass; ++m) {
    if (alpha(m) > static_cast<unsigned long long>(m) * alpha(1)) {
      fail("scaling: alpha(" + std::to_string(m) + ") > m * alpha(1)");
    }
    const Instance inst{points.n, s, BigInt(m)};
    if (BigInt(alpha(m)) > bounds::delta_bound(inst)) {
      fail("delta bound: alpha(" + std::to_string(m) + ") exceeds delta at m = " +
           std::to_string(m));
    }
  }
  return report;
}

SweepSummary theorem_sweep(unsigned n_min, unsigned n_max, std::uint64_t s_max,
                           std::uint64_t m_max, unsigned threads,
                           const std::function<void(const SweepRow&)>& sink) {
  if (n_min < 2) {
    throw std::invalid_argument("theorem_sweep: n_min must be >= 2");
  }
  if (n_max < n_min || s_max < 1 || m_max < 1) {
    throw std::invalid_argument("theorem_sweep: empty sweep range");
  }

  SweepSummary summary;
  const auto emit = [&](const SweepRow& row) {
    ++summary.rows;
    if (row.violation) {
      ++summary.violations;
    }
    if (sink) {
      sink(row);
    }
  };

  if (threads <= 1) {
    for (unsigned n = n_min; n <= n_max; ++n) {
      for (std::uint64_t s = 1; s <= s_max; ++s) {
        for (std::uint64_t m = 1; m <= m_max; ++m) {
          emit(sweep_cell(n, s, m));
        }
      }
    }
    return summary;
  }

  // Parallel path: one block per (n, s) pair, workers claim blocks from an
  // atomic counter, the caller's sink sees blocks strictly in index order —
  // output is identical to the sequential run.  Workers pause claiming when
  // they run too far ahead of the emitter, so buffered output stays bounded
  // regardless of grid size.
  const std::uint64_t n_count = n_max - n_min + 1;
  const std::uint64_t total_blocks = n_count * s_max;
  const std::uint64_t window = std::max<std::uint64_t>(16, 4ULL * threads);
  std::atomic<std::uint64_t> next_block{0};
  std::mutex mu;
  std::condition_variable ready;
  std::map<std::uint64_t, std::vector<SweepRow>> finished;  // guarded by mu
  std::uint64_t emitted_blocks = 0;                         // guarded by mu
  std::exception_ptr failure;                               // guarded by mu

  const auto worker = [&]() {
    try {
      while (true) {
        {
          std::unique_lock<std::mutex> lock(mu);
          ready.wait(lock, [&] {
            return failure || next_block.load() < emitted_blocks + window;
          });
          if (failure) {
            return;
          }
        }
        const std::uint64_t b = next_block.fetch_add(1);
        if (b >= total_blocks) {
          return;
        }
        const unsigned n = n_min + static_cast<unsigned>(b / s_max);
        const std::uint64_t s = 1 + b % s_max;
        std::vector<SweepRow> rows;
        rows.reserve(m_max);
        for (std::uint64_t m = 1; m <= m_max; ++m) {
          rows.push_back(sweep_cell(n, s, m));
        }
        std::lock_guard<std::mutex> lock(mu);
        finished.emplace(b, std::move(rows));
        ready.notify_all();
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) {
        failure = std::current_exception();
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back(worker);
  }

  try {
    for (std::uint64_t b = 0; b < total_blocks; ++b) {
      std::vector<SweepRow> rows;
      {
        std::unique_lock<std::mutex> lock(mu);
        ready.wait(lock, [&] { return failure || finished.count(b) != 0; });
        if (failure) {
          break;
        }
        rows = std::move(finished[b]);
        finished.erase(b);
        ++emitted_blocks;
        ready.notify_all();
      }
      for (const SweepRow& row : rows) {
        emit(row);
      }
    }
  } catch (...) {
    std::lock_guard<std::mutex> lock(mu);
    if (!failure) {
      failure = std::current_exception();
    }
    ready.notify_all();
  }

  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return summary;
}

ChudnovskyReport chudnovsky_report(const interpolation::PointSet& points,
                                   unsigned cap) {
  const BigInt s(static_cast<unsigned long>(points.points.size()));
  const unsigned n = points.n;
  const unsigned use_cap =
      cap != 0 ? cap : interpolation::default_degree_cap(n, s, 1);

  ChudnovskyReport report;
  report.alpha = interpolation::alpha_of(points, 1, use_cap).alpha;
  report.ratio = ratio_of(BigInt(report.alpha) + (n - 1), BigInt(n));
  report.k = exactnum::int_nth_root(s, n);
  report.ratio_le_k = BigInt(report.alpha) + (n - 1) <= report.k * n;
  return report;
}

}  // namespace fatpoints::verify
