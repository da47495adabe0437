#include "radii/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "radii/errors.hpp"
#include "radii/radii.hpp"
#include "radii/verify.hpp"

namespace radii {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

// One output row: the record fields plus an optional status for tables.
struct Record {
  ClassKind cls;
  std::string region;
  std::optional<double> alpha;
  double b = 0.0;
  std::optional<double> c;
  double q = 0.0;
  std::optional<double> d, s, m, n, l;
  std::optional<RadiusResult> result;
  std::string status;
};

Record make_record(const Region& region, ClassKind cls, double b, std::optional<double> c, double q) {
  Record r;
  r.cls = cls;
  r.region = std::string(region.name());
  if (region.kind() == RegionKind::StarlikeOrder) r.alpha = region.alpha();
  r.b = b;
  r.c = c;
  r.q = q;
  return r;
}

void fill_derived(Record& r, const ClassParams& p) {
  switch (p.kind()) {
    case ClassKind::H1: r.d = p.d(); r.s = p.s(); break;
    case ClassKind::H2: r.m = p.m(); r.n = p.n(); break;
    case ClassKind::H3: r.l = p.l(); break;
  }
}

const char* const kCsvHeader =
    "class,region,alpha,b,c,q,d,s,m,n,l,radius,method,residual,crosscheck,sharp_claimed";

std::string opt(const std::optional<double>& x) { return x ? num(*x) : std::string(); }

std::string csv_row(const Record& r, bool with_status) {
  std::string row = std::string(to_string(r.cls)) + "," + r.region + "," + opt(r.alpha) + "," +
                    num(r.b) + "," + opt(r.c) + "," + num(r.q) + "," + opt(r.d) + "," + opt(r.s) +
                    "," + opt(r.m) + "," + opt(r.n) + "," + opt(r.l) + ",";
  if (r.result) {
    row += num(r.result->radius) + "," + std::string(to_string(r.result->method)) + "," +
           num(r.result->residual) + "," + num(r.result->cross_check_discrepancy) + "," +
           (r.result->sharp_claimed ? "true" : "false");
  } else {
    row += ",,,,";
  }
  if (with_status) row += "," + r.status;
  return row;
}

std::string json_row(const Record& r, bool with_status) {
  std::string out = "{\"class\":\"" + std::string(to_string(r.cls)) + "\",\"region\":\"" + r.region + "\"";
  auto field = [&](const char* key, const std::optional<double>& x) {
    if (x) out += std::string(",\"") + key + "\":" + num(*x);
  };
  field("alpha", r.alpha);
  field("b", r.b);
  field("c", r.c);
  field("q", r.q);
  field("d", r.d);
  field("s", r.s);
  field("m", r.m);
  field("n", r.n);
  field("l", r.l);
  if (r.result) {
    out += ",\"radius\":" + num(r.result->radius) + ",\"method\":\"" +
           std::string(to_string(r.result->method)) + "\",\"residual\":" + num(r.result->residual) +
           ",\"crosscheck\":" + num(r.result->cross_check_discrepancy) +
           ",\"sharp_claimed\":" + (r.result->sharp_claimed ? "true" : "false");
  }
  if (with_status) out += ",\"status\":\"" + json_escape(r.status) + "\"";
  return out + "}";
}

std::string text_row(const Record& r) {
  char radius[32];
  std::snprintf(radius, sizeof radius, "%.7f", r.result->radius);
  std::string out = std::string(to_string(r.cls)) + " " + r.region;
  if (r.alpha) out += " alpha=" + num(*r.alpha);
  out += " b=" + num(r.b);
  if (r.c) out += " c=" + num(*r.c);
  out += " q=" + num(r.q) + ": radius " + radius + " (" + std::string(to_string(r.result->method)) +
         (r.result->sharp_claimed ? ", sharp)" : ", not claimed sharp)");
  return out;
}

Region make_region(const std::string& name, std::optional<double> alpha) {
  const auto kind = parse_region_kind(name);
  if (!kind) throw UsageError("unknown region '" + name + "'");
  if (*kind == RegionKind::StarlikeOrder) {
    if (!alpha) throw UsageError("the starlike region requires --alpha");
    return Region::starlike(*alpha);
  }
  if (alpha) throw UsageError("--alpha applies only to the starlike region");
  return Region::of(*kind);
}

ClassParams make_params(ClassKind cls, double b, std::optional<double> c, double q) {
  switch (cls) {
    case ClassKind::H1:
    case ClassKind::H2:
      if (!c) throw UsageError("class " + std::string(to_string(cls)) + " requires --c");
      return cls == ClassKind::H1 ? ClassParams::h1(b, *c, q) : ClassParams::h2(b, *c, q);
    case ClassKind::H3:
      if (c) throw UsageError("class h3 takes no --c");
      return ClassParams::h3(b, q);
  }
  throw UsageError("unknown class");
}

ClassKind make_class(const std::string& name) {
  const auto cls = parse_class_kind(name);
  if (!cls) throw UsageError("unknown class '" + name + "'");
  return *cls;
}

struct Range {
  double lo, hi;
  std::size_t steps;

  std::vector<double> values() const {
    std::vector<double> v;
    for (std::size_t i = 0; i < steps; ++i) {
      v.push_back(steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
    return v;
  }
};

Range parse_range(const std::string& text, const char* flag) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  const std::string bad = std::string(flag) + " expects lo:hi:steps, got '" + text + "'";
  if (parts.size() != 3) throw UsageError(bad);
  Range r{};
  try {
    std::size_t used = 0;
    r.lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw UsageError(bad);
    r.hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw UsageError(bad);
    const long long steps = std::stoll(parts[2], &used);
    if (used != parts[2].size() || steps < 1) throw UsageError(std::string(flag) + " needs steps >= 1");
    r.steps = static_cast<std::size_t>(steps);
  } catch (const std::logic_error&) {
    throw UsageError(bad);
  }
  if (!(std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo <= r.hi)) {
    throw UsageError(std::string(flag) + " needs finite lo <= hi");
  }
  return r;
}

unsigned thread_cap() {
  const char* env = std::getenv("RADII_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError("RADII_THREADS must be a positive integer");
  return static_cast<unsigned>(v);
}

// --- subcommands -----------------------------------------------------------

struct ComputeArgs {
  std::string cls, region, format = "json";
  std::optional<double> alpha, c;
  double b = 0.0, q = 0.0, tol = kDefaultTolerance;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const ClassKind cls = make_class(a.cls);
  const Region region = make_region(a.region, a.alpha);
  const ClassParams params = make_params(cls, a.b, a.c, a.q);
  Record rec = make_record(region, cls, a.b, a.c, a.q);
  fill_derived(rec, params);
  rec.result = compute_radius(region, params, a.tol);
  if (a.format == "csv") {
    out << kCsvHeader << "\n" << csv_row(rec, false) << "\n";
  } else if (a.format == "text") {
    out << text_row(rec) << "\n";
  } else {
    out << json_row(rec, false) << "\n";
  }
  return kExitOk;
}

struct TableArgs {
  std::vector<std::string> classes, regions;
  std::string b_range, c_range, q_range, format = "csv", out_path;
  double alpha = 0.0;
  double tol = kDefaultTolerance;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<ClassKind> classes;
  for (const auto& name : a.classes) {
    if (name == "all") {
      classes.insert(classes.end(), {ClassKind::H1, ClassKind::H2, ClassKind::H3});
    } else {
      classes.push_back(make_class(name));
    }
  }
  std::vector<Region> regions;
  for (const auto& name : a.regions) {
    if (name == "all") {
      for (RegionKind kind : all_region_kinds()) {
        regions.push_back(kind == RegionKind::StarlikeOrder ? Region::starlike(a.alpha) : Region::of(kind));
      }
    } else {
      const auto kind = parse_region_kind(name);
      if (!kind) throw UsageError("unknown region '" + name + "'");
      regions.push_back(*kind == RegionKind::StarlikeOrder ? Region::starlike(a.alpha) : Region::of(*kind));
    }
  }
  const Range b_range = parse_range(a.b_range, "--b-range");
  const Range q_range = parse_range(a.q_range, "--q-range");
  const bool needs_c = std::any_of(classes.begin(), classes.end(), [](ClassKind k) { return k != ClassKind::H3; });
  std::optional<Range> c_range;
  if (!a.c_range.empty()) c_range = parse_range(a.c_range, "--c-range");
  if (needs_c && !c_range) throw UsageError("--c-range is required for classes h1 and h2");

  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) throw UsageError("cannot write to '" + a.out_path + "'");
    sink = &file;
  }
  const bool csv = a.format == "csv";
  if (csv) *sink << kCsvHeader << ",status\n";

  const unsigned threads = thread_cap();
  for (ClassKind cls : classes) {
    struct Cell {
      double b;
      std::optional<double> c;
      double q;
      std::optional<ClassParams> params;
      std::string error;
    };
    std::vector<Cell> cells;
    std::vector<ClassParams> admissible;
    const std::vector<std::optional<double>> c_values = [&] {
      std::vector<std::optional<double>> v;
      if (cls == ClassKind::H3) return std::vector<std::optional<double>>{std::nullopt};
      for (double c : c_range->values()) v.emplace_back(c);
      return v;
    }();
    for (double b : b_range.values()) {
      for (const auto& c : c_values) {
        for (double q : q_range.values()) {
          Cell cell{b, c, q, std::nullopt, {}};
          try {
            cell.params = make_params(cls, b, c, q);
            admissible.push_back(*cell.params);
          } catch (const Error& e) {
            cell.error = e.what();
          }
          cells.push_back(std::move(cell));
        }
      }
    }
    std::vector<TableEntry> entries;
    if (!admissible.empty()) entries = radius_table(regions, admissible, a.tol, threads);
    std::size_t next = 0;
    for (const Region& region : regions) {
      for (const Cell& cell : cells) {
        Record rec = make_record(region, cls, cell.b, cell.c, cell.q);
        if (!cell.params) {
          rec.status = "inadmissible";
        } else {
          const TableEntry& entry = entries[next++];
          fill_derived(rec, entry.params);
          rec.result = entry.result;
          rec.status = entry.result ? "ok" : std::string(to_string(*entry.error_kind));
          if (!entry.result) err << "warning: " << entry.error << "\n";
        }
        *sink << (csv ? csv_row(rec, true) : json_row(rec, true)) << "\n";
      }
    }
  }
  sink->flush();
  if (!*sink) throw UsageError("failed writing table output");
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all", format = "json";
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<VerificationReport> reports;
  const bool all = a.suite == "all";
  if (all || a.suite == "lemmas") reports.push_back(verify_lemma_bounds(a.samples, a.seed));
  if (all || a.suite == "crosscheck") reports.push_back(verify_polynomial_crosscheck(a.samples, a.seed));
  if (all || a.suite == "tightness") reports.push_back(verify_tightness_suite(a.samples, a.seed));
  bool ok = true;
  for (const auto& report : reports) {
    out << to_json(report) << "\n";
    ok = ok && report.passed();
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

struct BoundaryArgs {
  std::string region, out_path;
  std::optional<double> alpha;
  std::size_t points = 4096;
};

int cmd_boundary(const BoundaryArgs& a, std::ostream& out, std::ostream& err) {
  const Region region = make_region(a.region, a.alpha);
  if (a.points < 1) throw UsageError("--points must be at least 1");
  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.out_path.empty()) {
    file.open(a.out_path);
    if (!file) throw UsageError("cannot write to '" + a.out_path + "'");
    sink = &file;
  }
  const std::size_t skipped = write_boundary_csv(*sink, region, a.points);
  sink->flush();
  if (!*sink) throw UsageError("failed writing boundary output");
  if (skipped > 0) {
    err << "warning: " << skipped << " of " << a.points
        << " directions never leave the region and were omitted\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radius constants for classes of analytic functions with fixed second coefficient"};
  app.name(args.empty() ? "radii" : args[0]);
  app.require_subcommand(1);

  const std::vector<std::string> region_names = [] {
    std::vector<std::string> v;
    for (RegionKind kind : all_region_kinds()) v.emplace_back(to_string(kind));
    return v;
  }();

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute one radius");
  c->add_option("--class", compute.cls, "h1, h2 or h3")->required()->check(CLI::IsMember({"h1", "h2", "h3"}));
  c->add_option("--region", compute.region, "Target region")->required()->check(CLI::IsMember(region_names));
  c->add_option("--alpha", compute.alpha, "Order of starlikeness (starlike region only)");
  c->add_option("--b", compute.b, "b")->required();
  c->add_option("--c", compute.c, "c (h1, h2)");
  c->add_option("--q", compute.q, "q")->required();
  c->add_option("--tol", compute.tol, "Root tolerance in [1e-14, 1e-6]");
  c->add_option("--format", compute.format)->check(CLI::IsMember({"json", "csv", "text"}));

  TableArgs table;
  auto* t = app.add_subcommand("table", "Radii over a parameter grid");
  t->add_option("--class", table.classes, "h1, h2, h3 or all (repeatable)")->required();
  t->add_option("--region", table.regions, "Region name or all (repeatable)")->required();
  t->add_option("--b-range", table.b_range, "lo:hi:steps")->required();
  t->add_option("--c-range", table.c_range, "lo:hi:steps (h1, h2)");
  t->add_option("--q-range", table.q_range, "lo:hi:steps")->required();
  t->add_option("--alpha", table.alpha, "Order for starlike rows (default 0)");
  t->add_option("--tol", table.tol, "Root tolerance in [1e-14, 1e-6]");
  t->add_option("--format", table.format)->check(CLI::IsMember({"csv", "jsonl"}));
  t->add_option("--out", table.out_path, "Output file (default stdout)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run verification suites");
  v->add_option("--suite", verify.suite)->check(CLI::IsMember({"lemmas", "crosscheck", "tightness", "all"}));
  v->add_option("--samples", verify.samples, "Samples (lemmas), parameter sets per class (crosscheck) or per pair (tightness)")
      ->check(CLI::PositiveNumber);
  v->add_option("--seed", verify.seed);
  v->add_option("--format", verify.format)->check(CLI::IsMember({"json"}));

  BoundaryArgs boundary;
  auto* b = app.add_subcommand("boundary", "Export a region boundary as CSV");
  b->add_option("--region", boundary.region)->required()->check(CLI::IsMember(region_names));
  b->add_option("--alpha", boundary.alpha, "Order of starlikeness (starlike region only)");
  b->add_option("--points", boundary.points)->check(CLI::PositiveNumber);
  b->add_option("--out", boundary.out_path, "Output file (default stdout)");

  std::vector<const char*> argv;
  for (const auto& arg : args) argv.push_back(arg.c_str());
  if (argv.empty()) argv.push_back("radii");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out);
    if (t->parsed()) return cmd_table(table, out, err);
    if (v->parsed()) return cmd_verify(verify, out);
    return cmd_boundary(boundary, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::NoRoot ? kExitNoRoot : kExitUsage;
  }
}

}  // namespace radii
