#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "exhaustive_space.hpp"
#include "sumprod/harness.hpp"

namespace sumprod::harness {

namespace {

using InstanceSource = std::function<BoundInstance(std::uint64_t)>;

struct Partial {
  std::uint64_t tested = 0;
  std::uint64_t vacuous = 0;
  std::vector<Failure> failures;
  std::vector<InstanceRecord> records;
};

// Instances may be checked in any order by any worker; the merged failure
// and record lists are sorted by index so the report does not depend on
// scheduling.
void check_all(LemmaId id, std::uint64_t count, const InstanceSource& source,
               const RunOptions& opts, LemmaReport& report) {
  unsigned threads = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                       : opts.threads;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));

  std::vector<Partial> parts(threads);
  std::exception_ptr error;
  std::mutex error_mu;

  auto worker = [&](unsigned t) {
    try {
      auto& part = parts[t];
      for (std::uint64_t i = t; i < count; i += threads) {
        auto inst = source(i);
        auto result = check_lemma(id, inst, opts.backend);
        switch (result) {
          case CheckResult::Holds: ++part.tested; break;
          case CheckResult::VacuouslyTrue: ++part.vacuous; break;
          case CheckResult::Fails:
            ++part.tested;
            part.failures.push_back({i, inst});
            break;
        }
        if (opts.record_instances) part.records.push_back({i, result, std::move(inst)});
      }
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }
  if (error) std::rethrow_exception(error);

  for (auto& part : parts) {
    report.tested += part.tested;
    report.vacuous += part.vacuous;
    std::move(part.failures.begin(), part.failures.end(), std::back_inserter(report.failures));
    std::move(part.records.begin(), part.records.end(), std::back_inserter(report.records));
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const Failure& a, const Failure& b) { return a.index < b.index; });
  std::sort(report.records.begin(), report.records.end(),
            [](const InstanceRecord& a, const InstanceRecord& b) { return a.index < b.index; });
}

std::int64_t millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

LemmaReport run_exhaustive(LemmaId id, PrimeModulus p, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const detail::ExhaustiveSpace space(id, p, opts.caps);
  LemmaReport report;
  report.lemma = id;
  report.mode = Mode::Exhaustive;
  report.p = p.value();
  report.seed = 0;
  check_all(id, space.size(), [&](std::uint64_t i) { return space.at(i); }, opts, report);
  report.elapsed_ms = millis_since(start);
  return report;
}

LemmaReport run_random(LemmaId id, PrimeModulus p, std::uint64_t samples, std::uint64_t seed,
                       const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  LemmaReport report;
  report.lemma = id;
  report.mode = Mode::Random;
  report.p = p.value();
  report.seed = seed;
  check_all(
      id, samples, [&](std::uint64_t i) { return random_instance(id, p, opts.caps, seed, i); }, opts,
      report);
  report.elapsed_ms = millis_since(start);
  return report;
}


}  // namespace sumprod::harness
