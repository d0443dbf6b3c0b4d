// utk: command-line front end for the universal-tree library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "utk/bounds.hpp"
#include "utk/constructions.hpp"
#include "utk/embedding.hpp"
#include "utk/search.hpp"
#include "utk/shape.hpp"
#include "utk/tanglegram.hpp"

namespace {

enum Exit : int { ok = 0, check_failed = 1, usage = 2, resource_limit = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int d = 2;
  bool redleaf = false;
  bool count = false;
  bool json = false;
  std::string format = "text";
  std::string output;
  int threads = 0;
};

std::string read_input(const std::string& arg) {
  // a path if it names a file, literal text otherwise
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot read " + arg);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw UsageError("cannot write " + opt.output);
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string format_of(const Options& opt) { return opt.json ? "json" : opt.format; }

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (f == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw UsageError("format '" + f + "' not supported here (use " + list + ")");
}

std::string shape_text(const utk::Shape& s, const std::string& f) {
  if (f == "newick") return utk::to_newick(s) + "\n";
  if (f == "dot") return utk::to_dot(s);
  return s.code() + "\n";
}

int default_threads() {
  const char* env = std::getenv("UTK_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 4096) throw UsageError("UTK_THREADS must be a non-negative integer");
  return static_cast<int>(v);
}

int cmd_enumerate(const Options& opt) {
  const std::string f = format_of(opt);
  require_format(f, {"text", "json", "newick", "dot"});
  if (opt.count) {
    const auto c = utk::count_shapes(opt.n, opt.d, opt.redleaf);
    emit(opt, f == "json" ? dump({{"n", opt.n}, {"d", opt.d}, {"redleaf", opt.redleaf}, {"count", c}})
                          : std::to_string(c) + "\n");
    return ok;
  }
  const auto shapes = utk::enumerate_shapes(opt.n, opt.d, opt.redleaf);
  if (f == "json") {
    nlohmann::json codes = nlohmann::json::array();
    for (const auto& s : shapes) codes.push_back(s.code());
    emit(opt, dump({{"n", opt.n}, {"d", opt.d}, {"redleaf", opt.redleaf}, {"count", shapes.size()},
                    {"shapes", codes}}));
    return ok;
  }
  std::string out;
  for (const auto& s : shapes) out += shape_text(s, f);
  emit(opt, out);
  return ok;
}

int cmd_check(const Options& opt, const std::string& file) {
  const std::string f = format_of(opt);
  require_format(f, {"text", "json"});
  const utk::Shape s = utk::parse_shape(read_input(file), opt.d);
  const bool universal = utk::is_universal(s, opt.n, opt.d, opt.redleaf);
  if (f == "json") {
    emit(opt, dump({{"n", opt.n}, {"d", opt.d}, {"redleaf", opt.redleaf},
                    {"white_leaves", s.white_leaves()}, {"code", s.code()},
                    {"universal", universal}}));
  } else {
    emit(opt, std::string(universal ? "universal" : "not universal") + " (n=" +
                  std::to_string(opt.n) + ", " + std::to_string(s.white_leaves()) +
                  " white leaves)\n");
  }
  return universal ? ok : check_failed;
}

int cmd_build(const Options& opt, const std::string& kind, int k, bool minimal, bool trace) {
  const std::string f = format_of(opt);
  utk::UniversalBuilder builder(opt.d);
  if (minimal) {
    // replace recursive parts by searched minimal shapes up to n
    for (int m = 1; m <= std::max(opt.n, 1); ++m) {
      auto r = utk::find_min_universal(m, opt.d, false, {0, 0, opt.threads});
      builder.inject(m, utk::parse_code(r.minimal_shapes.front().text, opt.d));
    }
  }
  if (kind == "tanglegram") {
    require_format(f, {"text", "json", "dot"});
    const auto t = utk::build_universal_tanglegram(builder.universal(opt.n));
    if (f == "dot") {
      emit(opt, utk::tanglegram_to_dot(t));
    } else if (f == "json") {
      emit(opt, dump({{"n", opt.n}, {"d", opt.d}, {"size", t.size()},
                      {"tanglegram", utk::format_tanglegram(t)}}));
    } else {
      emit(opt, utk::format_tanglegram(t) + "\n");
    }
    return ok;
  }
  require_format(f, {"text", "json", "newick", "dot"});
  utk::Shape s;
  if (kind == "universal") {
    s = builder.universal(opt.n);
  } else if (kind == "redleaf") {
    s = builder.redleaf(opt.n);
  } else if (kind == "comb") {
    s = utk::build_redleaf_comb(k, builder);
  } else {
    throw UsageError("unknown kind '" + kind + "'");
  }
  if (f == "json") {
    nlohmann::json j = {{"kind", kind}, {"n", opt.n}, {"d", opt.d}, {"code", s.code()},
                        {"white_leaves", s.white_leaves()}, {"size_bound", utk::quad_upper(opt.n).str()}};
    if (kind == "comb") j["k"] = k;
    if (trace && kind != "comb") j["trace"] = builder.trace(opt.n, kind == "redleaf");
    emit(opt, dump(j));
  } else {
    emit(opt, shape_text(s, f));
  }
  return ok;
}

int cmd_search(const Options& opt, int to, std::int64_t max_candidates, double max_seconds,
               bool timing) {
  const std::string f = format_of(opt);
  require_format(f, {"text", "json", "catalog"});
  const utk::SearchConfig config{max_candidates, max_seconds, opt.threads};
  const int last = to > 0 ? to : opt.n;
  if (last < opt.n) throw UsageError("--to must be at least -n");
  std::vector<utk::SearchReport> reports;
  bool complete = true;
  for (int n = opt.n; n <= last && complete; ++n) {
    reports.push_back(utk::find_min_universal(n, opt.d, opt.redleaf, config));
    complete = reports.back().authoritative;
  }
  if (f == "json") {
    nlohmann::json all = nlohmann::json::array();
    for (const auto& r : reports) {
      auto j = utk::to_json(r);
      if (!timing) j.erase("wall_time");
      all.push_back(std::move(j));
    }
    emit(opt, dump(reports.size() == 1 ? all.front() : all));
  } else if (f == "catalog") {
    std::string out;
    for (const auto& r : reports) out += utk::catalog_text(r);
    emit(opt, out);
  } else if (reports.size() > 1) {
    emit(opt, utk::format_reports_table(reports));
  } else {
    const auto& r = reports.front();
    std::ostringstream out;
    if (r.authoritative) {
      out << (r.redleaf ? "u1(" : "u(") << r.n << ") = " << r.u_value << "  (d=" << r.d << ", "
          << r.minimal_shapes.size() << " minimal shapes, " << r.candidates_examined
          << " candidates)\n";
    } else {
      out << "search stopped by " << r.stopped_by << " after " << r.candidates_examined
          << " candidates\n";
    }
    if (timing) out << "wall time " << r.wall_time << " s\n";
    out << utk::catalog_text(r);
    emit(opt, out.str());
  }
  if (!complete) {
    std::cerr << "utk: resource limit reached (" << reports.back().stopped_by
              << "); results are not authoritative\n";
    return resource_limit;
  }
  return ok;
}

utk::JellyfishSpec parse_jelly(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t a = 0;
    std::size_t b = 0;
    const int h = std::stoi(text.substr(0, comma), &a);
    const int l = std::stoi(text.substr(comma + 1), &b);
    if (a != comma || b != text.size() - comma - 1 || h < 0 || l < 1) throw std::invalid_argument(text);
    return {h, l};
  } catch (const std::exception&) {
    throw UsageError("jellyfish spec must be h,l with h >= 0, l >= 1 (got '" + text + "')");
  }
}

int cmd_mast(const Options& opt, const std::vector<std::string>& trees,
             const std::vector<std::string>& jelly) {
  const std::string f = format_of(opt);
  require_format(f, {"text", "json"});
  std::int64_t value = 0;
  if (!jelly.empty()) {
    if (jelly.size() != 2 || !trees.empty()) throw UsageError("--jelly takes exactly two specs");
    value = utk::jellyfish_mast(parse_jelly(jelly[0]), parse_jelly(jelly[1]));
  } else {
    if (trees.size() != 2) throw UsageError("mast needs two trees or --jelly h1,l1 h2,l2");
    value = utk::mast(utk::parse_shape(read_input(trees[0])), utk::parse_shape(read_input(trees[1])));
  }
  emit(opt, f == "json" ? dump({{"mast", value}}) : std::to_string(value) + "\n");
  return ok;
}

int cmd_bounds(const Options& opt, int from, int to) {
  const std::string f = format_of(opt);
  require_format(f, {"text", "json", "csv"});
  const auto rows = utk::bound_table(from, to);
  if (f == "json") {
    emit(opt, dump(utk::bound_table_json(rows)));
  } else if (f == "csv") {
    emit(opt, utk::format_bound_table_csv(rows));
  } else {
    emit(opt, utk::format_bound_table_text(rows));
  }
  return ok;
}

int cmd_tangle_enumerate(const Options& opt) {
  const std::string f = format_of(opt);
  require_format(f, {"text", "json", "dot"});
  const auto all = utk::enumerate_tanglegrams(opt.n, opt.d, opt.threads);
  if (opt.count) {
    emit(opt, f == "json" ? dump({{"n", opt.n}, {"d", opt.d}, {"count", all.size()}})
                          : std::to_string(all.size()) + "\n");
    return ok;
  }
  if (f == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& t : all) list.push_back(utk::format_tanglegram(t));
    emit(opt, dump({{"n", opt.n}, {"d", opt.d}, {"count", all.size()}, {"tanglegrams", list}}));
    return ok;
  }
  std::string out;
  for (const auto& t : all) out += f == "dot" ? utk::tanglegram_to_dot(t) : utk::format_tanglegram(t) + "\n";
  emit(opt, out);
  return ok;
}

int cmd_tangle_check(const Options& opt, const std::string& file) {
  const std::string f = format_of(opt);
  require_format(f, {"text", "json"});
  const auto t = utk::parse_tanglegram(read_input(file), opt.d);
  const bool universal = utk::is_universal_tanglegram(t, opt.n);
  if (f == "json") {
    emit(opt, dump({{"n", opt.n}, {"d", opt.d}, {"size", t.size()}, {"universal", universal}}));
  } else {
    emit(opt, std::string(universal ? "universal" : "not universal") + " (n=" +
                  std::to_string(opt.n) + ", size " + std::to_string(t.size()) + ")\n");
  }
  return universal ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal rooted trees and tanglegrams"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, bool needs_n) {
    auto* n = sub->add_option("-n", opt.n, "number of (white) leaves")->check(CLI::Range(1, 200));
    if (needs_n) n->required();
    sub->add_option("-d", opt.d, "arity bound")->check(CLI::Range(2, 64));
    sub->add_option("--format", opt.format, "output format");
    sub->add_flag("--json", opt.json, "same as --format json");
    sub->add_option("-o", opt.output, "output file (default stdout)");
    sub->add_option("--threads", opt.threads, "worker threads (default $UTK_THREADS or all cores)")
        ->check(CLI::NonNegativeNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "list all shapes with n (white) leaves");
  common(enumerate, true);
  enumerate->add_flag("--redleaf", opt.redleaf, "shapes with one extra red leaf");
  enumerate->add_flag("--count", opt.count, "print the count only");

  std::string tree_file;
  auto* check = app.add_subcommand("check", "test whether a tree is n-universal");
  common(check, true);
  check->add_option("tree", tree_file, "file (or literal) with a canonical code or Newick")->required();
  check->add_flag("--redleaf", opt.redleaf, "check redleaf universality");

  std::string kind = "universal";
  int comb_k = 1;
  bool minimal = false;
  bool trace = false;
  auto* build = app.add_subcommand("build", "build a universal tree or tanglegram");
  common(build, false);
  build->add_option("--kind", kind, "universal, redleaf, comb or tanglegram")
      ->check(CLI::IsMember({"universal", "redleaf", "comb", "tanglegram"}));
  build->add_option("-k", comb_k, "comb parameter (sequence s_k)")->check(CLI::Range(0, 12));
  build->add_flag("--minimal", minimal, "use searched minimal universal shapes as parts");
  build->add_flag("--trace", trace, "include construction provenance (json)");

  int search_to = 0;
  std::int64_t max_candidates = 0;
  double max_seconds = 0;
  bool timing = false;
  auto* search = app.add_subcommand("search", "find all minimal n-universal shapes");
  common(search, true);
  search->add_flag("--redleaf", opt.redleaf, "search redleaf shapes");
  search->add_option("--to", search_to, "search every n up to this value and print a table");
  search->add_option("--max-candidates", max_candidates, "candidate limit (0: none)")
      ->check(CLI::NonNegativeNumber);
  search->add_option("--max-seconds", max_seconds, "time limit (0: none)")->check(CLI::NonNegativeNumber);
  search->add_flag("--timing", timing, "report wall time");

  std::vector<std::string> mast_trees;
  std::vector<std::string> jelly;
  auto* mast = app.add_subcommand("mast", "maximum agreement subtree size");
  common(mast, false);
  mast->add_option("trees", mast_trees, "two trees (files or literals)");
  mast->add_option("--jelly", jelly, "two jellyfish specs h,l")->expected(2);

  int bounds_from = 1;
  int bounds_to = 12;
  auto* bounds = app.add_subcommand("bounds", "table of bounds on u(n)");
  common(bounds, false);
  bounds->add_option("--from", bounds_from, "first n")->check(CLI::Range(1, 100000));
  bounds->add_option("--to", bounds_to, "last n")->check(CLI::Range(1, 100000));

  auto* tangle_enumerate = app.add_subcommand("tangle-enumerate", "list all tanglegrams of size n");
  common(tangle_enumerate, true);
  tangle_enumerate->add_flag("--count", opt.count, "print the count only");

  std::string tangle_file;
  auto* tangle_check = app.add_subcommand("tangle-check", "test whether a tanglegram is n-universal");
  common(tangle_check, true);
  tangle_check->add_option("tanglegram", tangle_file, "file (or literal): left|right|matching")->required();

  try {
    opt.threads = default_threads();
    app.parse(argc, argv);
    if (build->parsed() && kind != "comb" && opt.n < 1) throw UsageError("build needs -n");
    if (bounds->parsed() && bounds_to < bounds_from) throw UsageError("--to must be at least --from");

    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (check->parsed()) return cmd_check(opt, tree_file);
    if (build->parsed()) return cmd_build(opt, kind, comb_k, minimal, trace);
    if (search->parsed()) return cmd_search(opt, search_to, max_candidates, max_seconds, timing);
    if (mast->parsed()) return cmd_mast(opt, mast_trees, jelly);
    if (bounds->parsed()) return cmd_bounds(opt, bounds_from, bounds_to);
    if (tangle_enumerate->parsed()) return cmd_tangle_enumerate(opt);
    if (tangle_check->parsed()) return cmd_tangle_check(opt, tangle_file);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  } catch (const UsageError& e) {
    std::cerr << "utk: " << e.what() << "\n";
    return usage;
  } catch (const utk::ParseError& e) {
    std::cerr << "utk: parse error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "utk: " << e.what() << "\n";
    return usage;
  } catch (const std::bad_alloc&) {
    std::cerr << "utk: out of memory\n";
    return resource_limit;
  } catch (const std::exception& e) {
    std::cerr << "utk: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
