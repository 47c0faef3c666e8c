#include "starsem/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "starsem/enumeration.hpp"
#include "starsem/generation.hpp"
#include "starsem/greens.hpp"
#include "starsem/version.hpp"

namespace starsem::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct NRange {
  int lo = 0;
  int hi = 0;
};

NRange parse_n_range(const std::string& text) {
  auto fail = [&]() -> NRange {
    throw std::invalid_argument("--n expects <n> or <lo>..<hi>, got '" + text +
                                "'");
  };
  NRange r;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [p1, e1] = std::from_chars(begin, end, r.lo);
  if (e1 != std::errc()) return fail();
  if (p1 == end) {
    r.hi = r.lo;
  } else {
    if (end - p1 < 3 || p1[0] != '.' || p1[1] != '.') return fail();
    auto [p2, e2] = std::from_chars(p1 + 2, end, r.hi);
    if (e2 != std::errc() || p2 != end) return fail();
  }
  if (r.lo < 1 || r.hi < r.lo)
    throw std::invalid_argument("--n range '" + text + "' is empty or not positive");
  return r;
}

std::vector<Family> parse_families(const std::string& name, bool primary_only) {
  if (name == "all")
    return {kPrimaryFamilies.begin(), kPrimaryFamilies.end()};
  auto f = family_from_name(name);
  if (!f) throw std::invalid_argument("unknown family '" + name + "'");
  if (primary_only && !is_primary(*f))
    throw std::invalid_argument("family '" + name +
                                "' is auxiliary; this command works on the six "
                                "primary monoids");
  return {*f};
}

std::vector<GreensRelation> parse_relations(const std::string& name) {
  if (name == "all")
    return {GreensRelation::R, GreensRelation::L, GreensRelation::H,
            GreensRelation::J};
  auto rel = relation_from_name(name);
  if (!rel)
    throw std::invalid_argument("unknown relation '" + name +
                                "' (expected R, L, H, J or all)");
  return {*rel};
}

struct Config {
  std::optional<NRange> n;
  std::string family = "all";
  std::string format = "text";
  std::string relation = "all";
  Caps caps;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  long long sample = -1;  // -1: exhaustive up to n = 4, 100000 pairs above
  std::vector<std::string> inputs;
};

NRange n_or_default(const Config& cfg, int lo, int hi) {
  return cfg.n ? *cfg.n : NRange{lo, hi};
}

int single_n(const Config& cfg, int fallback) {
  NRange r = n_or_default(cfg, fallback, fallback);
  if (r.lo != r.hi)
    throw std::invalid_argument("this command takes a single n, not a range");
  return r.lo;
}

struct Report {
  std::string command;
  ordered_json config = ordered_json::object();
  std::vector<ordered_json> rows;
  std::optional<ordered_json> nested_rows;  // JSON-only structured view
  std::size_t checks = 0;
  std::size_t failures = 0;
};

std::string cell_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit(const Report& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    ordered_json doc;
    doc["tool"] = "starsem";
    doc["version"] = kVersion;
    doc["command"] = report.command;
    doc["config"] = report.config;
    doc["rows"] = report.nested_rows ? *report.nested_rows
                                     : ordered_json(report.rows);
    doc["summary"] = ordered_json{{"checks", report.checks},
                                  {"failures", report.failures},
                                  {"pass", report.failures == 0}};
    out << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    if (report.rows.empty()) return;
    bool first = true;
    for (auto it = report.rows.front().begin(); it != report.rows.front().end();
         ++it) {
      if (!first) out << ",";
      out << csv_escape(it.key());
      first = false;
    }
    out << "\n";
    for (const auto& row : report.rows) {
      first = true;
      for (auto it = row.begin(); it != row.end(); ++it) {
        if (!first) out << ",";
        out << csv_escape(cell_text(it.value()));
        first = false;
      }
      out << "\n";
    }
    return;
  }
  // text: aligned columns and a one-line summary
  if (!report.rows.empty()) {
    std::vector<std::string> keys;
    for (auto it = report.rows.front().begin(); it != report.rows.front().end();
         ++it)
      keys.push_back(it.key());
    std::vector<std::size_t> width(keys.size());
    for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
    for (const auto& row : report.rows)
      for (std::size_t c = 0; c < keys.size(); ++c)
        if (row.contains(keys[c]))
          width[c] = std::max(width[c], cell_text(row[keys[c]]).size());
    auto line = [&](auto get) {
      for (std::size_t c = 0; c < keys.size(); ++c) {
        std::string v = get(c);
        out << v << std::string(width[c] - v.size(), ' ')
            << (c + 1 < keys.size() ? "  " : "");
      }
      out << "\n";
    };
    line([&](std::size_t c) { return keys[c]; });
    for (const auto& row : report.rows)
      line([&](std::size_t c) {
        return row.contains(keys[c]) ? cell_text(row[keys[c]]) : std::string();
      });
  }
  out << (report.failures == 0 ? "PASS" : "FAIL") << ": " << report.checks
      << " checks, " << report.failures << " failures\n";
}

bool fault_injected(const char* name) {
  // fault-injection hook used by the test suite to pin the exit-code contract
  const char* fault = std::getenv("SM_SELFTEST_FAULT");
  return fault != nullptr && std::string_view(fault) == name;
}

void cmd_census(const Config& cfg, Report& report) {
  NRange range = n_or_default(cfg, 1, 6);
  for (Family f : parse_families(cfg.family, false))
    for (int n = range.lo; n <= range.hi; ++n) {
      FamilyCensus c = census(f, n, cfg.caps);
      mpz_class formula = c.formula_count;
      if (fault_injected("census-formula")) formula += 1;
      bool match = (c.enumerated_count == formula);
      report.rows.push_back(ordered_json{
          {"family", family_name(f)},
          {"n", n},
          {"formula_count", formula.get_str()},
          {"enumerated_count", c.enumerated_count.get_str()},
          {"match", match}});
      ++report.checks;
      if (!match) ++report.failures;
    }
}

void cmd_check(const Config& cfg, Report& report) {
  if (cfg.inputs.empty())
    throw std::invalid_argument("check needs at least one transformation "
                                "(codec: \"n=<N>; x->y ...\")");
  auto families = parse_families(cfg.family, false);
  for (const auto& text : cfg.inputs) {
    auto a = PartialTransformation::parse(text);
    for (Family f : families) {
      bool fast = is_member(f, a);
      bool definitional = is_member_definitional(f, a);
      report.rows.push_back(ordered_json{{"input", a.to_string()},
                                         {"family", family_name(f)},
                                         {"primary", is_primary(f)},
                                         {"member", fast},
                                         {"member_definitional", definitional},
                                         {"agree", fast == definitional}});
      ++report.checks;
      if (fast != definitional) ++report.failures;
    }
  }
}

void greens_pair(const Config& cfg, Report& report) {
  auto a = PartialTransformation::parse(cfg.inputs[0]);
  auto b = PartialTransformation::parse(cfg.inputs[1]);
  if (a.n() != b.n())
    throw std::invalid_argument("the two transformations have different n");
  auto relations = parse_relations(cfg.relation);
  std::vector<Family> families;
  for (Family f : parse_families(cfg.family, true))
    if (is_member(f, a) && is_member(f, b)) families.push_back(f);
  if (families.empty())
    throw std::invalid_argument("no requested family contains both inputs");
  const bool with_oracle = a.n() <= cfg.caps.greens_oracle;
  for (Family f : families) {
    std::optional<GreensOracle> oracle;
    if (with_oracle) oracle.emplace(f, a.n(), cfg.caps);
    for (GreensRelation rel : relations) {
      bool formula = related(rel, f, a, b);
      ordered_json row{{"family", family_name(f)},
                       {"relation", relation_name(rel)},
                       {"left", a.to_string()},
                       {"right", b.to_string()},
                       {"formula", formula}};
      ++report.checks;
      if (oracle) {
        bool ground = oracle->related(rel, a, b);
        row["oracle"] = ground;
        row["agree"] = formula == ground;
        if (formula != ground) ++report.failures;
      }
      report.rows.push_back(std::move(row));
    }
  }
}

void greens_sweep(const Config& cfg, Report& report) {
  const int n = single_n(cfg, 3);
  auto relations = parse_relations(cfg.relation);
  for (Family f : parse_families(cfg.family, true)) {
    GreensOracle oracle(f, n, cfg.caps);
    const int m = static_cast<int>(oracle.size());
    const bool exhaustive = cfg.sample < 0 && n <= 4;
    std::vector<std::pair<int, int>> pairs;
    if (exhaustive) {
      pairs.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) pairs.emplace_back(i, j);
    } else {
      long long count = cfg.sample < 0 ? 100000 : cfg.sample;
      std::mt19937_64 rng(cfg.seed);
      std::uniform_int_distribution<int> pick(0, m - 1);
      pairs.reserve(static_cast<std::size_t>(count));
      for (long long t = 0; t < count; ++t)
        pairs.emplace_back(pick(rng), pick(rng));
    }
    for (GreensRelation rel : relations) {
      std::size_t disagreements = 0;
      std::vector<ordered_json> details;
      for (auto [i, j] : pairs) {
        bool formula = related(rel, f, oracle.element(i), oracle.element(j));
        bool ground = oracle.related(rel, i, j);
        if (formula != ground) {
          ++disagreements;
          details.push_back(ordered_json{
              {"family", family_name(f)},
              {"relation", relation_name(rel)},
              {"mode", "mismatch"},
              {"pairs", ordered_json()},
              {"disagreements", ordered_json()},
              {"left", oracle.element(i).to_string()},
              {"right", oracle.element(j).to_string()},
              {"formula", formula},
              {"oracle", ground}});
        }
      }
      report.rows.push_back(
          ordered_json{{"family", family_name(f)},
                       {"relation", relation_name(rel)},
                       {"mode", exhaustive ? "exhaustive" : "sampled"},
                       {"pairs", pairs.size()},
                       {"disagreements", disagreements},
                       {"left", ""},
                       {"right", ""},
                       {"formula", ""},
                       {"oracle", ""}});
      for (auto& d : details) report.rows.push_back(std::move(d));
      ++report.checks;
      if (disagreements) ++report.failures;
    }
  }
}

void cmd_greens(const Config& cfg, Report& report) {
  if (cfg.inputs.size() == 2) {
    greens_pair(cfg, report);
  } else if (cfg.inputs.empty()) {
    greens_sweep(cfg, report);
  } else {
    throw std::invalid_argument(
        "greens takes either no transformations (sweep) or exactly two");
  }
}

void cmd_eggbox(const Config& cfg, Report& report) {
  const int n = single_n(cfg, 3);
  ordered_json nested = ordered_json::array();
  for (Family f : parse_families(cfg.family, true)) {
    EggBoxReport box = egg_box(f, n, cfg.caps);
    ordered_json classes = ordered_json::array();
    mpz_class total = 0;
    for (const auto& cls : box.classes) {
      ordered_json row{{"family", family_name(f)},
                       {"n", n},
                       {"representative", cls.representative.to_string()},
                       {"size", cls.size},
                       {"r_classes", cls.r_classes},
                       {"l_classes", cls.l_classes},
                       {"h_size", cls.h_size},
                       {"rectangular", cls.rectangular},
                       {"regular", cls.regular},
                       {"rank", cls.rank},
                       {"zero_in_dom", cls.zero_in_dom},
                       {"zero_in_image", cls.zero_in_image}};
      report.rows.push_back(row);
      row.erase("family");
      row.erase("n");
      classes.push_back(std::move(row));
      total += mpz_class(static_cast<unsigned long>(cls.size));
    }
    bool sums = (total == cardinality(f, n));
    ++report.checks;
    if (!sums) ++report.failures;
    nested.push_back(ordered_json{{"family", family_name(f)},
                                  {"n", n},
                                  {"total", box.total_size},
                                  {"sums_to_cardinality", sums},
                                  {"classes", std::move(classes)}});
  }
  report.nested_rows = std::move(nested);
}

void cmd_regular(const Config& cfg, Report& report) {
  NRange range = n_or_default(cfg, 3, 3);
  for (Family f : parse_families(cfg.family, true))
    for (int n = range.lo; n <= range.hi; ++n) {
      GreensOracle oracle(f, n, cfg.caps);
      std::size_t regular_count = 0, mismatches = 0, missing_paut = 0;
      std::string first_mismatch;
      for (const auto& a : oracle.elements()) {
        bool formula = is_regular(f, a);
        auto witness = oracle.regular_witness(a);
        if (formula != witness.has_value()) {
          ++mismatches;
          if (first_mismatch.empty()) first_mismatch = a.to_string();
        }
        if (witness) {
          ++regular_count;
          if (!oracle.regular_witness_in_paut(a)) ++missing_paut;
        }
      }
      report.rows.push_back(ordered_json{
          {"family", family_name(f)},
          {"n", n},
          {"size", oracle.size()},
          {"regular", regular_count},
          {"nonregular", oracle.size() - regular_count},
          {"mismatches", mismatches},
          {"missing_paut_witness", missing_paut},
          {"first_mismatch", first_mismatch}});
      ++report.checks;
      if (mismatches || missing_paut) ++report.failures;
    }
}

void cmd_verify_generators(const Config& cfg, Report& report) {
  NRange range = n_or_default(cfg, 3, 5);
  for (Family f : parse_families(cfg.family, true))
    for (int n = range.lo; n <= range.hi; ++n) {
      GeneratorCheck check = verify_generators(f, n, cfg.caps);
      report.rows.push_back(ordered_json{
          {"family", family_name(f)},
          {"n", n},
          {"generators", check.generators.size()},
          {"closure_size", check.closure_size},
          {"expected_size", check.expected_size.get_str()},
          {"generators_member", check.generators_member},
          {"closure_within_family", check.closure_within_family},
          {"size_matches", check.size_matches},
          {"ok", check.ok()}});
      ++report.checks;
      if (!check.ok()) ++report.failures;
    }
}

void cmd_rank_certify(const Config& cfg, Report& report) {
  const int n = single_n(cfg, 3);
  ordered_json nested = ordered_json::array();
  for (Family f : parse_families(cfg.family, true)) {
    RankCertificate cert = certify_rank(f, n, cfg.caps, cfg.jobs);
    std::string witness_text;
    ordered_json witness = ordered_json::array();
    if (cert.witness)
      for (const auto& w : *cert.witness) {
        if (!witness_text.empty()) witness_text += " / ";
        witness_text += w.to_string();
        witness.push_back(w.to_string());
      }
    report.rows.push_back(ordered_json{{"family", family_name(f)},
                                       {"n", n},
                                       {"rank", cert.rank},
                                       {"family_size", cert.levels.back().family_size},
                                       {"subsets_examined", cert.subsets_examined},
                                       {"witness", witness_text},
                                       {"runtime_ms", cert.runtime_ms}});
    ordered_json levels = ordered_json::array();
    for (const auto& level : cert.levels)
      levels.push_back(ordered_json{{"k", level.k},
                                    {"subsets_examined", level.subsets_examined},
                                    {"witness_found", level.witness.has_value()}});
    nested.push_back(ordered_json{{"family", family_name(f)},
                                  {"n", n},
                                  {"rank", cert.rank},
                                  {"family_size", cert.levels.back().family_size},
                                  {"subsets_examined", cert.subsets_examined},
                                  {"levels", std::move(levels)},
                                  {"witness", std::move(witness)},
                                  {"runtime_ms", cert.runtime_ms}});
    ++report.checks;
  }
  report.nested_rows = std::move(nested);
}

void cmd_decompose(const Config& cfg, Report& report) {
  NRange range = n_or_default(cfg, 1, 6);
  auto add_row = [&](const char* kind, int n, const std::string& family,
                     const char* part, std::size_t size,
                     const mpz_class& expected, bool ok) {
    report.rows.push_back(ordered_json{
        {"kind", kind},
        {"n", n},
        {"family", family},
        {"part", part},
        {"size", size},
        {"expected", expected.get_str()},
        {"ok", ok}});
    ++report.checks;
    if (!ok) ++report.failures;
  };
  auto equals = [](std::size_t size, const mpz_class& expected) {
    return mpz_class(static_cast<unsigned long>(size)) == expected;
  };

  for (int n = range.lo; n <= range.hi; ++n) {
    auto paut = decompose_paut(n, cfg.caps);
    mpz_class outer_isym = 0;
    for (int k = 0; k <= n - 1; ++k) {
      mpz_class ck, fk;
      mpz_bin_uiui(ck.get_mpz_t(), static_cast<unsigned long>(n - 1),
                   static_cast<unsigned long>(k));
      mpz_fac_ui(fk.get_mpz_t(), static_cast<unsigned long>(k));
      outer_isym += ck * ck * fk;
    }
    add_row("paut", n, "PAut", "outer_perms", paut.outer_perms.size(),
            outer_isym, equals(paut.outer_perms.size(), outer_isym));
    add_row("paut", n, "PAut", "lifted_perms", paut.lifted_perms.size(),
            outer_isym, equals(paut.lifted_perms.size(), outer_isym));
    add_row("paut", n, "PAut", "centre_swaps", paut.centre_swaps.size(),
            mpz_class((n - 1) * (n - 1)),
            equals(paut.centre_swaps.size(), mpz_class((n - 1) * (n - 1))));
    add_row("paut", n, "PAut", "centre_rank_one", paut.centre_rank_one.size(),
            mpz_class(2 * (n - 1)),
            equals(paut.centre_rank_one.size(), mpz_class(2 * (n - 1))));
    {
      std::vector<PartialTransformation> all;
      for (const auto* part :
           {&paut.outer_perms, &paut.lifted_perms, &paut.centre_swaps,
            &paut.centre_rank_one})
        all.insert(all.end(), part->begin(), part->end());
      std::sort(all.begin(), all.end(), codec_less);
      bool disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();
      bool exhaustive = all == enumerate_family(Family::PAut, n, cfg.caps);
      add_row("paut", n, "PAut", "disjoint_union", all.size(),
              cardinality(Family::PAut, n), disjoint && exhaustive);
    }

    auto iend = decompose_iend(n, cfg.caps);
    mpz_class r0 = cardinality(Family::IEnd, n) - cardinality(Family::PAut, n);
    add_row("iend", n, "IEnd", "paut_part", iend.paut_part.size(),
            cardinality(Family::PAut, n),
            equals(iend.paut_part.size(), cardinality(Family::PAut, n)));
    add_row("iend", n, "IEnd", "r0_part", iend.r0_part.size(), r0,
            equals(iend.r0_part.size(), r0));
    {
      std::vector<PartialTransformation> all = iend.paut_part;
      all.insert(all.end(), iend.r0_part.begin(), iend.r0_part.end());
      std::sort(all.begin(), all.end(), codec_less);
      bool disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();
      bool exhaustive = all == enumerate_family(Family::IEnd, n, cfg.caps);
      add_row("iend", n, "IEnd", "disjoint_union", all.size(),
              cardinality(Family::IEnd, n), disjoint && exhaustive);
    }

    for (Family f : parse_families(cfg.family, true)) {
      auto u = units(f, n, cfg.caps);
      mpz_class expected;
      mpz_fac_ui(expected.get_mpz_t(),
                 static_cast<unsigned long>(n >= 3 ? n - 1 : n));
      bool ok = equals(u.size(), expected);
      if (n >= 3)
        for (const auto& x : u)
          ok = ok && x.dom_mask() == full_mask(n) && x.is_injective() &&
               x.value(0) == 0;
      add_row("units", n, std::string(family_name(f)), "units", u.size(),
              expected, ok);
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"structure of the partial endomorphism monoids of star graphs"};
  app.name("starsem");
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  Config cfg;
  if (cfg.jobs < 1) cfg.jobs = 1;
  std::string n_text;
  app.add_option("--n", n_text, "vertex count, a single n or a range lo..hi")
      ->envname("SM_N");
  app.add_option("--family", cfg.family,
                 "family name (PwEnd, PEnd, PsEnd, PswEnd, IEnd, PAut, PT, I, "
                 "2PT) or 'all'")
      ->envname("SM_FAMILY");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->envname("SM_FORMAT");
  app.add_option("--relation", cfg.relation, "Green's relation (R, L, H, J or all)")
      ->envname("SM_RELATION");
  app.add_option("--cap-enum", cfg.caps.enum_constructive,
                 "largest n for constructive enumeration")
      ->check(CLI::PositiveNumber)
      ->envname("SM_CAP_ENUM");
  app.add_option("--cap-closure", cfg.caps.closure_elements,
                 "element bound for closure computations")
      ->check(CLI::PositiveNumber)
      ->envname("SM_CAP_CLOSURE");
  app.add_option("--jobs", cfg.jobs, "worker threads for subset searches")
      ->check(CLI::PositiveNumber)
      ->envname("SM_JOBS");
  app.add_option("--seed", cfg.seed, "seed for sampled sweeps")
      ->envname("SM_SEED");
  app.add_option("--sample", cfg.sample,
                 "pair sample size for greens sweeps (default: exhaustive up "
                 "to n = 4, 100000 pairs for n = 5)")
      ->envname("SM_SAMPLE");

  auto* census_cmd = app.add_subcommand(
      "census", "enumerated counts against the closed-form cardinalities");
  auto* check_cmd =
      app.add_subcommand("check", "membership of transformations, both paths");
  check_cmd->add_option("transformation", cfg.inputs,
                        "codec strings like \"n=4; 0->1 1->0 2->0 3->0\"");
  auto* greens_cmd = app.add_subcommand(
      "greens", "Green's relation classifiers against the ideal-based oracle");
  greens_cmd->add_option("pair", cfg.inputs,
                         "two codec strings for a single-pair query");
  auto* eggbox_cmd =
      app.add_subcommand("eggbox", "J-classes with nested R/L/H structure");
  auto* regular_cmd = app.add_subcommand(
      "regular", "regularity criterion against the witness search");
  auto* verify_cmd = app.add_subcommand(
      "verify-generators", "closure of the named generating sets");
  auto* rank_cmd = app.add_subcommand(
      "rank-certify", "exhaustive rank certificates by subset search");
  auto* decompose_cmd = app.add_subcommand(
      "decompose", "structural decompositions and groups of units");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Report report;
  try {
    if (!n_text.empty()) cfg.n = parse_n_range(n_text);
    report.config =
        ordered_json{{"n", n_text.empty() ? "default" : n_text},
                     {"family", cfg.family},
                     {"relation", cfg.relation},
                     {"cap_enum", cfg.caps.enum_constructive},
                     {"cap_closure", cfg.caps.closure_elements},
                     {"jobs", cfg.jobs},
                     {"seed", cfg.seed},
                     {"sample", cfg.sample}};
    if (census_cmd->parsed()) {
      report.command = "census";
      cmd_census(cfg, report);
    } else if (check_cmd->parsed()) {
      report.command = "check";
      cmd_check(cfg, report);
    } else if (greens_cmd->parsed()) {
      report.command = "greens";
      cmd_greens(cfg, report);
    } else if (eggbox_cmd->parsed()) {
      report.command = "eggbox";
      cmd_eggbox(cfg, report);
    } else if (regular_cmd->parsed()) {
      report.command = "regular";
      cmd_regular(cfg, report);
    } else if (verify_cmd->parsed()) {
      report.command = "verify-generators";
      cmd_verify_generators(cfg, report);
    } else if (rank_cmd->parsed()) {
      report.command = "rank-certify";
      cmd_rank_certify(cfg, report);
    } else if (decompose_cmd->parsed()) {
      report.command = "decompose";
      cmd_decompose(cfg, report);
    } else {
      err << "error: a subcommand is required (see --help)\n";
      return 2;
    }
  } catch (const closure_cap_error& e) {
    err << "error: " << e.what() << " (found " << e.partial_count
        << " elements so far)\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  emit(report, cfg.format, out);
  return report.failures == 0 ? 0 : 1;
}

}  // namespace starsem::cli
