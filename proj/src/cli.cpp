#include "cherednik/cli.hpp"

#include <atomic>
#include <exception>
#include <iostream>
#include <mutex>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "cherednik/checks.hpp"
#include "cherednik/rank2.hpp"
#include "cherednik/report.hpp"
#include "cherednik/verma.hpp"

namespace cherednik::cli {
namespace {

constexpr std::size_t kMaxGridPoints = 100000;

struct RawArgs {
  std::string k, k1, k2, k1_range, k2_range;
};

// Builds the parser; `req` and `raw` receive the option values.
std::unique_ptr<CLI::App> make_app(Request& req, RawArgs& raw) {
  auto app = std::make_unique<CLI::App>("Rational Cherednik algebras of rank <= 2", "cherednik");
  app->require_subcommand(1);
  const std::vector<std::string> types{"A1", "A2", "B2", "G2"};

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", req.type, "root system type")
        ->required()
        ->check(CLI::IsMember(types));
  };
  auto add_k = [&](CLI::App* sub) {
    auto* k = sub->add_option("--k", raw.k, "multiplicity for every root (p/q)");
    auto* k1 = sub->add_option("--k1", raw.k1, "multiplicity of the short roots (p/q)");
    auto* k2 = sub->add_option("--k2", raw.k2, "multiplicity of the long roots (p/q)");
    k->excludes(k1)->excludes(k2);
    k2->needs(k1);
  };

  auto* info = app->add_subcommand("info", "root system, invariants and character table");
  add_type(info);
  info->add_option("--format", req.format)->check(CLI::IsMember({"json", "table"}));

  auto* classify = app->add_subcommand("classify", "finite-dimensionality of L(chi)");
  add_type(classify);
  classify->add_option("--chi", req.chi, "irrep label")->required();
  add_k(classify);
  classify->add_option("--max-degree", req.max_degree, "Gram scan bound when m0 is undefined")
      ->check(CLI::Range(1, 200));
  classify->add_option("--format", req.format)->check(CLI::IsMember({"json", "csv", "table"}));

  auto* gram = app->add_subcommand("gram", "contravariant form on M_n(chi)");
  add_type(gram);
  gram->add_option("--chi", req.chi, "irrep label")->required();
  add_k(gram);
  gram->add_option("--degree", req.degree, "degree n")->required()->check(CLI::Range(0, 60));
  gram->add_flag("--symbolic", req.symbolic, "generic Gram matrix over Q(sqrt3)[k1, k2]");
  gram->add_option("--format", req.format)->check(CLI::IsMember({"json", "table"}));

  auto* sweep = app->add_subcommand("sweep", "classify over a rational k-grid (CSV)");
  add_type(sweep);
  sweep->add_option("--chi", req.chi, "irrep label")->required();
  sweep->add_option("--k1-range", raw.k1_range, "a:b:step")->required();
  sweep->add_option("--k2-range", raw.k2_range, "a:b:step (default: k2 = k1)");
  sweep->add_option("--threads", req.threads, "worker threads")->check(CLI::Range(1u, 256u));
  sweep->add_option("--max-degree", req.max_degree)->check(CLI::Range(1, 200));

  auto* conj = app->add_subcommand("conjecture", "verify the closed form of phi_r");
  conj->add_option("--max-q", req.max_q, "check odd r up to 2q+1")
      ->required()
      ->check(CLI::Range(0, 500));

  auto* self = app->add_subcommand("selftest", "randomized identity checks");
  self->add_option("--seed", req.seed, "RNG seed");

  for (auto* sub : {info, classify, gram, sweep, conj, self})
    sub->callback([&req, sub] { req.subcommand = sub->get_name(); });
  return app;
}

void finalize(Request& req, const RawArgs& raw) {
  if (!raw.k.empty()) req.k = {Rat::parse(raw.k)};
  if (!raw.k1.empty()) req.k.push_back(Rat::parse(raw.k1));
  if (!raw.k2.empty()) req.k.push_back(Rat::parse(raw.k2));
  if (!raw.k1_range.empty()) req.k1_range = parse_range(raw.k1_range);
  if (!raw.k2_range.empty()) req.k2_range = parse_range(raw.k2_range);

  if (req.subcommand == "classify" && req.k.empty())
    throw parse_error("classify needs --k or --k1 [--k2]");
  if (req.subcommand == "gram") {
    if (req.symbolic && !req.k.empty()) throw parse_error("--symbolic takes no k values");
    if (!req.symbolic && req.k.empty()) throw parse_error("gram needs --k, --k1 or --symbolic");
  }
  if (req.subcommand != "sweep") return;
  const RootSystem& rs = root_system(parse_root_type(req.type));
  if (req.k2_range && rs.num_orbits == 1)
    throw parse_error(req.type + " has a single root orbit; --k2-range is not accepted");
  std::size_t points = expand(*req.k1_range).size();
  if (req.k2_range) points *= expand(*req.k2_range).size();
  if (points > kMaxGridPoints) throw parse_error("grid has more than 100000 points");
}

void calibrate_once() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    for (RootType t : kAllTypes) check_hbar_calibration(t);
  });
}

void run_sweep(const Request& req, std::ostream& out) {
  const RootType type = parse_root_type(req.type);
  irrep(type, req.chi);
  std::vector<std::vector<Rat>> grid;
  const auto k1s = expand(*req.k1_range);
  if (req.k2_range) {
    const auto k2s = expand(*req.k2_range);
    for (const Rat& a : k1s)
      for (const Rat& b : k2s) grid.push_back({a, b});
  } else {
    for (const Rat& a : k1s) grid.push_back({a});
  }

  std::vector<std::optional<ClassifyResult>> results(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        results[i] = classify(type, req.chi, grid[i], req.max_degree);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::min<std::size_t>(req.threads, std::max<std::size_t>(grid.size(), 1));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  out << csv_header() << "\n";
  for (const auto& r : results) out << csv_row(*r) << "\n";
}

void run_selftest(const Request& req, std::ostream& out) {
  Rng rng(req.seed);
  int failures = 0, passes = 0;
  auto report = [&](const std::string& name, const std::string& problem) {
    if (problem.empty()) {
      ++passes;
      out << "PASS " << name << "\n";
    } else {
      ++failures;
      out << "FAIL " << name << ": " << problem << "\n";
    }
  };
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      report(name, body());
    } catch (const std::exception& e) {
      report(name, e.what());
    }
  };

  for (RootType t : kAllTypes) {
    const RootSystem& rs = root_system(t);
    const std::string label = type_label(t);
    guarded(label + " calibration", [&] {
      check_hbar_calibration(t);
      return std::string();
    });
    guarded(label + " dunkl commutativity",
            [&] { return check_dunkl_commutativity(rs, rng, 5, 3); });
    guarded(label + " relation 1", [&] { return check_relation1(rs, 2); });
    guarded(label + " relation 3", [&] { return check_relation3(rs, 2); });
    guarded(label + " sl2 relations", [&] { return check_sl2(rs, 3); });
    guarded(label + " F(E^(p+1))", [&] { return check_power_contraction(rs, 3); });

    guarded(label + " criteria agree", [&] {
      // classify throws when the two criteria disagree.
      std::uniform_int_distribution<std::size_t> pick(0, irreps(t).size() - 1);
      for (int i = 0; i < 4; ++i) {
        const Irrep& chi = irreps(t)[pick(rng)];
        std::vector<Rat> k{random_rat(rng, 12, 6)};
        if (rs.num_orbits == 2) k.push_back(random_rat(rng, 12, 6));
        classify(t, chi.label, k);
      }
      return std::string();
    });

    guarded(label + " twist coherence", [&] {
      std::vector<Rat> k{random_rat(rng, 12, 6)};
      if (rs.num_orbits == 2) k.push_back(random_rat(rng, 12, 6));
      const auto kk = normalize_k(rs, k);
      for (const Irrep& tau : irreps(t)) {
        if (tau.dim != 1) continue;
        std::vector<Rat> kt = kk;
        for (int i = 0; i < rs.num_orbits; ++i)
          if (tau.reflection_character[i] < 0) kt[i] = -kt[i];
        for (const Irrep& chi : irreps(t)) {
          const auto a = graded_dims(t, chi.label, kk, 6).ranks;
          const auto b = graded_dims(t, tensor_with(t, chi, tau).label, kt, 6).ranks;
          if (a != b) return chi.label + " twisted by " + tau.label + " changes graded_dims";
        }
      }
      return std::string();
    });

    if (t == RootType::A1) continue;
    guarded(label + " pnr recursion vs closed form", [&] {
      for (int n = 0; n <= 6; ++n)
        for (int r = 0; 2 * r <= n; ++r)
          if (!(pnr(t, n, r) == pnr_closed(t, n, r)))
            return "n=" + std::to_string(n) + " r=" + std::to_string(r);
      return std::string();
    });
  }
  guarded("conjecture through r = 11", [&] {
    const auto c = conjecture62_check(5);
    return c.first_failure ? "fails at r = " + std::to_string(*c.first_failure) : std::string();
  });

  out << "selftest seed " << req.seed << ": " << passes << " passed, " << failures
      << " failed\n";
  if (failures > 0) throw invariant_violation("selftest failed");
}

}  // namespace

Range parse_range(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos || text.find(':', b + 1) != std::string::npos)
    throw parse_error("range must be a:b:step, got '" + text + "'");
  Range r{Rat::parse(text.substr(0, a)), Rat::parse(text.substr(a + 1, b - a - 1)),
          Rat::parse(text.substr(b + 1))};
  if (r.step.sign() <= 0) throw parse_error("range step must be positive in '" + text + "'");
  if (r.last < r.first) throw parse_error("range end precedes its start in '" + text + "'");
  return r;
}

std::vector<Rat> expand(const Range& r) {
  std::vector<Rat> out;
  for (Rat x = r.first; x <= r.last; x += r.step) {
    out.push_back(x);
    if (out.size() > kMaxGridPoints) throw parse_error("range has more than 100000 points");
  }
  return out;
}

Request parse_request(const std::vector<std::string>& args) {
  Request req;
  RawArgs raw;
  auto app = make_app(req, raw);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app->parse(reversed);
  finalize(req, raw);
  return req;
}

void execute(const Request& req, std::ostream& out) {
  if (req.subcommand == "conjecture") {
    out << to_json(conjecture62_check(req.max_q)).dump(2) << "\n";
    return;
  }
  calibrate_once();
  if (req.subcommand == "selftest") return run_selftest(req, out);

  const RootType type = parse_root_type(req.type);
  if (req.subcommand == "info") {
    if (req.format == "table")
      out << info_table(type);
    else
      out << info_json(type).dump(2) << "\n";
  } else if (req.subcommand == "classify") {
    const ClassifyResult r = classify(type, req.chi, req.k, req.max_degree);
    if (req.format == "csv")
      out << csv_header() << "\n" << csv_row(r) << "\n";
    else if (req.format == "table")
      out << classify_table(r);
    else
      out << to_json(r).dump(2) << "\n";
  } else if (req.subcommand == "gram") {
    const GramReport r = req.symbolic ? gram_symbolic(type, req.chi, req.degree)
                                      : gram_evaluated(type, req.chi, req.k, req.degree);
    if (req.format == "table")
      out << gram_table(r);
    else
      out << to_json(r).dump(2) << "\n";
  } else if (req.subcommand == "sweep") {
    run_sweep(req, out);
  } else {
    throw parse_error("unknown subcommand '" + req.subcommand + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  RawArgs raw;
  auto app = make_app(req, raw);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app->parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app->exit(e, out, err) == 0 ? 0 : 1;
  }
  try {
    finalize(req, raw);
    execute(req, out);
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cherednik::cli
