#include "cli/job.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/set_literal.hpp"
#include "sumprod/constructions.hpp"
#include "sumprod/error.hpp"
#include "sumprod/harness.hpp"

namespace sumprod::cli {

namespace {

using json = nlohmann::ordered_json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::BudgetExceeded:
    case Errc::ComputeBudgetExceeded:
      return kExitBudget;
    case Errc::NotPrime:
    case Errc::EvenPrime:
    case Errc::ModulusOutOfRange:
    case Errc::SyntaxError:
    case Errc::EmptySet:
    case Errc::NotADivisor:
    case Errc::EpsOutOfRange:
    case Errc::InvalidArgument:
    case Errc::MissingBinding:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

std::string check_only(std::initializer_list<std::pair<const char*, bool>> forbidden) {
  for (const auto& [name, present] : forbidden) {
    if (present) return std::string("--") + name + " is not accepted by this command";
  }
  return {};
}

bool has_caps(const JobConfig& c) {
  return c.max_size || c.max_summands || c.max_power || c.max_multiplier;
}

std::string render_witness(const Witness& w, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::Json:
      os << to_json(w).dump(2) << '\n';
      break;
    case OutputFormat::Csv: {
      os << "p,n,eps,case,n0,k,N,cover_verified,set\n";
      os << w.p.value() << ',' << w.n << ',' << w.eps << ',' << static_cast<int>(w.case_id) << ','
         << (w.n0 ? std::to_string(*w.n0) : "") << ',' << (w.k ? std::to_string(*w.k) : "") << ','
         << w.cover_order << ',' << (w.cover_verified ? "true" : "false") << ",\"";
      bool first = true;
      w.a.for_each([&](std::uint32_t x) {
        os << (first ? "" : " ") << x;
        first = false;
      });
      os << "\"\n";
      break;
    }
    case OutputFormat::Text:
      os << "p=" << w.p.value() << " |A|=" << w.a.size() << " n=" << w.n << " eps=" << w.eps
         << ": case " << static_cast<int>(w.case_id);
      if (w.n0) os << " n0=" << *w.n0;
      if (w.k) os << " k=" << *w.k;
      os << " N=" << w.cover_order << " cover " << (w.cover_verified ? "verified" : "NOT verified")
         << '\n';
      for (const auto& s : w.intermediate_sizes) os << "  " << s.label << " = " << s.size << '\n';
      break;
  }
  return os.str();
}

struct Outcome {
  std::string body;
  int code;
};

Outcome run_verify(const JobConfig& c) {
  const auto p = make_modulus(*c.p);
  const auto id = *harness::parse_lemma_id(*c.lemma);
  harness::RunOptions opts;
  if (c.max_size) opts.caps.max_set_size = *c.max_size;
  if (c.max_summands) opts.caps.max_summands = *c.max_summands;
  if (c.max_power) opts.caps.max_power = *c.max_power;
  if (c.max_multiplier) opts.caps.max_multiplier = *c.max_multiplier;
  if (c.budget) opts.caps.budget = *c.budget;
  opts.backend = c.backend;
  opts.threads = c.threads;
  opts.record_instances = c.format == OutputFormat::Csv;

  const bool exhaustive = c.mode.value_or("random") == "exhaustive";
  const auto report = exhaustive
                          ? harness::run_exhaustive(id, p, opts)
                          : harness::run_random(id, p, c.samples.value_or(1000),
                                                c.seed.value_or(kDefaultSeed), opts);
  std::string body;
  switch (c.format) {
    case OutputFormat::Json: body = harness::to_json(report, c.timing).dump(2) + "\n"; break;
    case OutputFormat::Csv: body = harness::to_csv(report); break;
    case OutputFormat::Text: body = harness::to_text(report); break;
  }
  return {body, report.passed() ? kExitOk : kExitFailure};
}

Outcome run_construct(const JobConfig& c) {
  const auto p = make_modulus(*c.p);
  const auto a = parse_set_literal(*c.set_literal, p);
  WitnessOptions opts;
  opts.backend = c.backend;
  if (c.budget) opts.max_cover_order = *c.budget;
  const auto w = theorem1_construct(a, *c.n, *c.eps, opts);
  return {render_witness(w, c.format), w.cover_verified ? kExitOk : kExitFailure};
}

Outcome run_subgroup(const JobConfig& c) {
  const auto p = make_modulus(*c.p);
  const auto g = make_subgroup(p, *c.order);
  WitnessOptions opts;
  opts.backend = c.backend;
  if (c.budget) opts.max_cover_order = *c.budget;
  const auto res = corollary1_check(g, opts);
  std::ostringstream os;
  switch (c.format) {
    case OutputFormat::Json: {
      json j;
      j["p"] = p.value();
      j["order"] = g.order;
      j["elements"] = g.elements.elements();
      j["N"] = res.cover_order;
      j["verified"] = res.verified;
      j["witness"] = to_json(res.witness);
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "p,order,n,N,verified\n"
         << p.value() << ',' << g.order << ',' << res.witness.n << ',' << res.cover_order << ','
         << (res.verified ? "true" : "false") << '\n';
      break;
    case OutputFormat::Text:
      os << "subgroup of order " << g.order << " in Z_" << p.value() << "^*: N=" << res.cover_order
         << (res.verified ? " verified" : " NOT verified") << '\n'
         << render_witness(res.witness, OutputFormat::Text);
      break;
  }
  return {os.str(), res.verified ? kExitOk : kExitFailure};
}

Outcome run_bench(const JobConfig& c) {
  using clock = std::chrono::steady_clock;
  const auto p = make_modulus(*c.p);
  const auto samples = c.samples.value_or(100);
  const auto seed = c.seed.value_or(kDefaultSeed);
  double dense_ms = 0, ntt_ms = 0;
  bool agree = true;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto inst = harness::random_instance(harness::LemmaId::C6, p, {}, seed, i);
    const auto& x = inst.set("X");
    const auto& y = inst.set("Y");
    auto t0 = clock::now();
    auto d = sumset(x, y, SumsetBackend::DenseShift);
    auto t1 = clock::now();
    auto n = sumset(x, y, SumsetBackend::NttConvolution);
    auto t2 = clock::now();
    dense_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
    ntt_ms += std::chrono::duration<double, std::milli>(t2 - t1).count();
    agree = agree && d == n;
  }
  std::ostringstream os;
  switch (c.format) {
    case OutputFormat::Json: {
      json j;
      j["p"] = p.value();
      j["samples"] = samples;
      j["seed"] = std::to_string(seed);
      j["dense_ms"] = dense_ms;
      j["ntt_ms"] = ntt_ms;
      j["agree"] = agree;
      os << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "p,samples,seed,dense_ms,ntt_ms,agree\n"
         << p.value() << ',' << samples << ',' << seed << ',' << dense_ms << ',' << ntt_ms << ','
         << (agree ? "true" : "false") << '\n';
      break;
    case OutputFormat::Text:
      os << "sumset p=" << p.value() << " samples=" << samples << ": dense " << dense_ms
         << " ms, ntt " << ntt_ms << " ms, backends " << (agree ? "agree" : "DISAGREE") << '\n';
      break;
  }
  return {os.str(), agree ? kExitOk : kExitFailure};
}

}  // namespace

std::string validate(const JobConfig& c) {
  if (!c.p) return "--p is required";
  switch (c.command) {
    case Command::Verify: {
      if (!c.lemma) return "--lemma is required";
      if (!harness::parse_lemma_id(*c.lemma)) return "unknown lemma id '" + *c.lemma + "'";
      const auto mode = c.mode.value_or("random");
      if (mode != "random" && mode != "exhaustive") return "--mode must be exhaustive or random";
      if (mode == "exhaustive") {
        if (auto e = check_only({{"samples", c.samples.has_value()}, {"seed", c.seed.has_value()}});
            !e.empty()) {
          return e + " in exhaustive mode";
        }
      } else if (c.budget) {
        return "--budget applies to exhaustive mode only";
      }
      return check_only({{"set", c.set_literal.has_value()},
                            {"n", c.n.has_value()},
                            {"eps", c.eps.has_value()},
                            {"order", c.order.has_value()}});
    }
    case Command::Construct:
      if (!c.set_literal) return "--set is required";
      if (!c.n) return "--n is required";
      if (!c.eps) return "--eps is required";
      if (has_caps(c)) return "size caps are not accepted by construct";
      return check_only({{"lemma", c.lemma.has_value()},
                            {"mode", c.mode.has_value()},
                            {"samples", c.samples.has_value()},
                            {"seed", c.seed.has_value()},
                            {"order", c.order.has_value()}});
    case Command::Subgroup:
      if (!c.order) return "--order is required";
      if (has_caps(c)) return "size caps are not accepted by subgroup";
      return check_only({{"lemma", c.lemma.has_value()},
                            {"mode", c.mode.has_value()},
                            {"set", c.set_literal.has_value()},
                            {"n", c.n.has_value()},
                            {"eps", c.eps.has_value()},
                            {"samples", c.samples.has_value()},
                            {"seed", c.seed.has_value()}});
    case Command::Bench:
      if (has_caps(c)) return "size caps are not accepted by bench";
      return check_only({{"lemma", c.lemma.has_value()},
                            {"mode", c.mode.has_value()},
                            {"set", c.set_literal.has_value()},
                            {"n", c.n.has_value()},
                            {"eps", c.eps.has_value()},
                            {"order", c.order.has_value()},
                            {"budget", c.budget.has_value()}});
  }
  return "unknown command";
}

int run_job(const JobConfig& config, std::ostream& out, std::ostream& err) {
  if (auto why = validate(config); !why.empty()) {
    err << "error: " << why << '\n';
    return kExitUsage;
  }
  Outcome outcome;
  try {
    switch (config.command) {
      case Command::Verify: outcome = run_verify(config); break;
      case Command::Construct: outcome = run_construct(config); break;
      case Command::Subgroup: outcome = run_subgroup(config); break;
      case Command::Bench: outcome = run_bench(config); break;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }

  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << *config.output_path << " for writing\n";
      return kExitUsage;
    }
    file << outcome.body;
  } else {
    out << outcome.body;
  }
  return outcome.code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sumset and product-set computations over Z_p", "sumprod"};
  app.require_subcommand(1);
  JobConfig c;

  auto* verify = app.add_subcommand("verify", "Check a lemma over exhaustive or seeded random instances");
  auto* construct = app.add_subcommand("construct", "Build and verify a covering witness N A^n = Z_p");
  auto* subgroup = app.add_subcommand("subgroup", "Cover Z_p by sums of a multiplicative subgroup");
  auto* bench = app.add_subcommand("bench", "Time the two sumset backends against each other");

  std::string format = "json";
  std::string backend = "dense";
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"text", OutputFormat::Text}};
  const std::map<std::string, SumsetBackend> backends{
      {"dense", SumsetBackend::DenseShift}, {"ntt", SumsetBackend::NttConvolution}};

  for (auto* sub : {verify, construct, subgroup, bench}) {
    sub->add_option("--p", c.p, "Odd prime modulus")->required();
    sub->add_option("--format", format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", c.output_path, "Write the report here instead of stdout");
  }
  for (auto* sub : {verify, construct, subgroup}) {
    sub->add_option("--backend", backend, "Sumset backend: dense or ntt")
        ->check(CLI::IsMember({"dense", "ntt"}));
  }

  verify->add_option("--lemma", c.lemma, "CD P1 L1..L10 C3..C7 T1")->required();
  verify->add_option("--mode", c.mode, "exhaustive or random (default random)");
  verify->add_option("--samples", c.samples, "Random instances (default 1000)");
  verify->add_option("--seed", c.seed, "Random seed");
  verify->add_option("--budget", c.budget, "Exhaustive checker-call budget (default 1e7)");
  verify->add_option("--max-size", c.max_size, "Largest set size drawn or enumerated");
  verify->add_option("--max-summands", c.max_summands, "Largest N for CD (default 3)");
  verify->add_option("--max-power", c.max_power, "Largest k or n (default 4)");
  verify->add_option("--max-multiplier", c.max_multiplier, "Largest K for C5 (default 2)");
  verify->add_option("--threads", c.threads, "Worker threads, 0 for all cores (default 1)");
  bool no_timing = false;
  verify->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0 for byte-stable reports");

  construct->add_option("--set", c.set_literal, "Set literal such as {1,2,5..9}")->required();
  construct->add_option("--n", c.n, "Product-set exponent n >= 2")->required();
  construct->add_option("--eps", c.eps, "eps in (0, n)")->required();
  construct->add_option("--budget", c.budget, "Largest cover order N to verify (default 2^24)");

  subgroup->add_option("--order", c.order, "Subgroup order d dividing p - 1")->required();
  subgroup->add_option("--budget", c.budget, "Largest cover order N to verify (default 2^24)");

  bench->add_option("--samples", c.samples, "Random set pairs (default 100)");
  bench->add_option("--seed", c.seed, "Random seed");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (verify->parsed()) c.command = Command::Verify;
  if (construct->parsed()) c.command = Command::Construct;
  if (subgroup->parsed()) c.command = Command::Subgroup;
  if (bench->parsed()) c.command = Command::Bench;
  c.format = formats.at(format);
  c.backend = backends.at(backend);
  c.timing = !no_timing;
  return run_job(c, out, err);
}

}  // namespace sumprod::cli
