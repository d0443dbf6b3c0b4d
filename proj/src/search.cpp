#include "utk/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "utk/bounds.hpp"
#include "utk/detail/parallel.hpp"
#include "utk/embedding.hpp"

namespace utk {

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Patterns ordered so that likely failures come first: the tallest shapes
// (caterpillars), then the shortest (complete-like), then the rest.
const std::vector<Shape>& ordered_patterns(int n, int d, bool redleaf) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, bool>, std::vector<Shape>> cache;
  std::lock_guard lock(mutex);
  auto [it, fresh] = cache.try_emplace({n, d, redleaf});
  if (fresh) {
    auto shapes = enumerate_shapes(n, d, redleaf);
    int lo = shapes.front().height();
    int hi = lo;
    for (const auto& s : shapes) {
      lo = std::min(lo, s.height());
      hi = std::max(hi, s.height());
    }
    auto rank = [&](const Shape& s) { return s.height() == hi ? 0 : s.height() == lo ? 1 : 2; };
    std::stable_sort(shapes.begin(), shapes.end(),
                     [&](const Shape& a, const Shape& b) { return rank(a) < rank(b); });
    it->second = std::move(shapes);
  }
  return it->second;
}

}  // namespace

bool is_universal(const Shape& t, int n, int d, bool redleaf) {
  if (n < 1) throw std::invalid_argument("is_universal needs n >= 1");
  const int arity = d == 0 ? t.arity() : d;
  const Shape host = t.arity() == arity ? t : t.with_arity(arity);
  if (redleaf && !host.has_red()) return false;
  if (host.white_leaves() < n) return false;
  // a caterpillar pattern needs this much height
  if (host.height() < (redleaf ? n : n - 1)) return false;
  for (const auto& p : ordered_patterns(n, arity, redleaf)) {
    EmbedTable table(p, host);
    if (!table.contains()) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

// Every shape up to the current leaf count, hash-consed by construction
// (each multiset of children is generated once). Each shape carries the set
// of small patterns that embed in it, computed from its children's sets.
class Universe {
 public:
  Universe(int n, int d, bool redleaf) : n_(n), d_(d), redleaf_(redleaf) {
    std::uint64_t patterns = 0;
    for (int w = 1; w <= n; ++w) patterns += count_shapes(w, d, false);
    if (redleaf) {
      for (int w = 0; w <= n; ++w) patterns += count_shapes(w, d, true);
    }
    words_ = static_cast<std::size_t>((patterns + 63) / 64);
    child_begin_.push_back(0);
    level_begin_.push_back(0);  // level 0 is empty
    level_begin_.push_back(0);
    add_shape({}, 1, 1, false);  // white leaf
    if (redleaf) add_shape({}, 1, 0, true);
    level_begin_.push_back(size());
    register_patterns(1);
    compute_bits(1, 1, nullptr);
  }

  std::size_t size() const { return leaves_.size(); }
  int levels() const { return static_cast<int>(level_begin_.size()) - 2; }

  // Generates all shapes with `leaves` leaves (must be levels() + 1).
  // `on_shape` runs once per new shape after its pattern set is known.
  template <class Visit>
  bool add_level(int leaves, int threads, const std::atomic<bool>& stop, Visit&& on_shape) {
    std::vector<std::uint32_t> stack;
    generate(leaves, leaves - 1, UINT32_MAX, 0, stack);
    level_begin_.push_back(size());
    register_patterns(leaves);
    return compute_bits(leaves, threads, &stop, std::forward<Visit>(on_shape));
  }

  bool is_target_universal(std::uint32_t id) const {
    const std::uint64_t* row = &bits_[id * words_];
    for (std::size_t w = 0; w < words_; ++w) {
      if ((row[w] & target_[w]) != target_[w]) return false;
    }
    return true;
  }

  int white(std::uint32_t id) const { return white_[id]; }
  bool red(std::uint32_t id) const { return red_[id] != 0; }

  Shape to_shape(std::uint32_t id, std::map<std::uint32_t, Shape>& memo) const {
    if (auto it = memo.find(id); it != memo.end()) return it->second;
    Shape s;
    if (leaves_[id] == 1) {
      s = make_leaf(red_[id] ? Color::red : Color::white, d_);
    } else {
      std::vector<Shape> parts;
      for (auto c = child_begin_[id]; c < child_begin_[id + 1]; ++c) {
        parts.push_back(to_shape(children_[c], memo));
      }
      s = join(std::move(parts));
    }
    memo.emplace(id, s);
    return s;
  }

 private:
  std::uint32_t add_shape(const std::vector<std::uint32_t>& children, int leaves, int white,
                          bool red) {
    const auto id = static_cast<std::uint32_t>(size());
    children_.insert(children_.end(), children.begin(), children.end());
    child_begin_.push_back(static_cast<std::uint32_t>(children_.size()));
    leaves_.push_back(static_cast<std::uint8_t>(leaves));
    white_.push_back(static_cast<std::uint8_t>(white));
    red_.push_back(red ? 1 : 0);
    pattern_of_.push_back(-1);
    return id;
  }

  // Children in non-increasing id order; ids grow with leaf count, so the
  // leaf count of successive children never increases either.
  void generate(int rem, int level_hi, std::uint32_t id_hi, int reds,
                std::vector<std::uint32_t>& stack) {
    const int k = static_cast<int>(stack.size());
    if (rem == 0) {
      if (k < 2) return;
      int white = 0;
      int leaves = 0;
      for (auto c : stack) {
        white += white_[c];
        leaves += leaves_[c];
      }
      add_shape(stack, leaves, white, reds > 0);
      return;
    }
    if (k == d_) return;
    for (int lvl = std::min(level_hi, rem); lvl >= 1; --lvl) {
      if (rem > (d_ - k) * lvl) break;
      const std::uint32_t begin = level_begin_[lvl];
      const std::uint32_t end = std::min<std::uint64_t>(level_begin_[lvl + 1],
                                                        static_cast<std::uint64_t>(id_hi) + 1);
      for (std::uint32_t id = begin; id < end; ++id) {
        const int r = reds + red_[id];
        if (r > 1) continue;
        stack.push_back(id);
        generate(rem - lvl, lvl, id, r, stack);
        stack.pop_back();
      }
    }
  }

  void register_patterns(int leaves) {
    for (auto id = level_begin_[leaves]; id < level_begin_[leaves + 1]; ++id) {
      if (white_[id] > n_) continue;
      const int p = static_cast<int>(pattern_ids_.size());
      pattern_of_[id] = p;
      pattern_ids_.push_back(id);
      if (target_.empty()) target_.assign(words_, 0);
      if (white_[id] == n_ && (red_[id] != 0) == redleaf_) {
        target_[p / 64] |= std::uint64_t{1} << (p % 64);
      }
    }
    bits_.resize(size() * words_, 0);
  }

  bool has(std::uint32_t host, int pattern) const {
    return (bits_[host * words_ + pattern / 64] >> (pattern % 64)) & 1U;
  }

  bool assign(const std::uint32_t* pc, int kp, const std::uint32_t* hc, int k, int i,
              unsigned used) const {
    if (i == kp) return true;
    const int pattern = pattern_of_[pc[i]];
    for (int j = 0; j < k; ++j) {
      if ((used >> j) & 1U) continue;
      if (has(hc[j], pattern) && assign(pc, kp, hc, k, i + 1, used | (1U << j))) return true;
    }
    return false;
  }

  void fill(std::uint32_t id) {
    std::uint64_t* row = &bits_[id * words_];
    const int own = pattern_of_[id];
    if (leaves_[id] == 1) {
      if (own >= 0) row[own / 64] |= std::uint64_t{1} << (own % 64);
      return;
    }
    const std::uint32_t* hc = &children_[child_begin_[id]];
    const int k = static_cast<int>(child_begin_[id + 1] - child_begin_[id]);
    for (int j = 0; j < k; ++j) {
      const std::uint64_t* c = &bits_[hc[j] * words_];
      for (std::size_t w = 0; w < words_; ++w) row[w] |= c[w];
    }
    for (std::size_t p = 0; p < pattern_ids_.size(); ++p) {
      const auto pid = pattern_ids_[p];
      if (leaves_[pid] > leaves_[id]) break;
      if ((row[p / 64] >> (p % 64)) & 1U) continue;
      const int kp = static_cast<int>(child_begin_[pid + 1] - child_begin_[pid]);
      if (kp == 0 || kp > k) continue;
      if (white_[pid] > white_[id] || red_[pid] > red_[id]) continue;
      const std::uint32_t* pc = &children_[child_begin_[pid]];
      bool ok;
      if (kp == 2 && k == 2) {
        const int a = pattern_of_[pc[0]];
        const int b = pattern_of_[pc[1]];
        ok = (has(hc[0], a) && has(hc[1], b)) || (has(hc[0], b) && has(hc[1], a));
      } else {
        ok = assign(pc, kp, hc, k, 0, 0);
      }
      if (ok) row[p / 64] |= std::uint64_t{1} << (p % 64);
    }
  }

  bool compute_bits(int leaves, int threads, const std::atomic<bool>* stop) {
    return compute_bits(leaves, threads, stop, [](std::uint32_t) {});
  }

  template <class Visit>
  bool compute_bits(int leaves, int threads, const std::atomic<bool>* stop, Visit&& on_shape) {
    const std::uint32_t begin = level_begin_[leaves];
    const std::uint32_t end = level_begin_[leaves + 1];
    constexpr std::uint32_t chunk = 512;
    const std::size_t chunks = (end - begin + chunk - 1) / chunk;
    std::atomic<bool> aborted{false};
    detail::parallel_for(chunks, threads, [&](std::size_t c) {
      if (stop && stop->load(std::memory_order_relaxed)) {
        aborted = true;
        return;
      }
      const auto lo = begin + static_cast<std::uint32_t>(c) * chunk;
      const auto hi = std::min(end, lo + chunk);
      for (auto id = lo; id < hi; ++id) {
        fill(id);
        on_shape(id);
      }
    });
    return !aborted;
  }

  int n_;
  int d_;
  bool redleaf_;
  std::size_t words_ = 1;
  std::vector<std::uint32_t> children_;
  std::vector<std::uint32_t> child_begin_;
  std::vector<std::uint8_t> leaves_;
  std::vector<std::uint8_t> white_;
  std::vector<std::uint8_t> red_;
  std::vector<int> pattern_of_;
  std::vector<std::uint32_t> pattern_ids_;
  std::vector<std::uint64_t> target_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> level_begin_;  // level_begin_[L] = first id with L leaves
};

}  // namespace

SearchReport find_min_universal(int n, int d, bool redleaf, const SearchConfig& config) {
  if (n < 1) throw std::invalid_argument("find_min_universal needs n >= 1");
  if (d < 2) throw std::invalid_argument("find_min_universal needs d >= 2");
  if (n > 200) throw std::invalid_argument("find_min_universal: n too large");
  const auto start = Clock::now();
  const int threads = resolve_threads(config.threads);

  SearchReport report;
  report.n = n;
  report.d = d;
  report.redleaf = redleaf;

  std::atomic<bool> stop{false};
  auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };
  auto out_of_time = [&] { return config.max_seconds > 0 && elapsed() > config.max_seconds; };

  Universe universe(n, d, redleaf);
  std::vector<std::uint32_t> found;
  std::mutex found_mutex;
  // candidates have m white leaves plus the red leaf when searching redleaf shapes
  const int extra = redleaf ? 1 : 0;
  if (n == 1 && !redleaf) {
    // the white leaf itself, already built
    report.candidates_examined = 1;
    found.push_back(0);
    report.u_value = 1;
    report.authoritative = true;
  }
  for (int leaves = 2; !report.authoritative; ++leaves) {
    const int m = leaves - extra;
    if (leaves > 255) throw std::runtime_error("find_min_universal: leaf count overflow");
    if (out_of_time()) {
      report.stopped_by = "max_seconds";
      break;
    }
    if (m >= n && config.max_candidates > 0) {
      const std::uint64_t level = m >= 1 ? count_shapes(m, d, redleaf) : 0;
      if (report.candidates_examined + static_cast<std::int64_t>(level) > config.max_candidates) {
        report.stopped_by = "max_candidates";
        break;
      }
    }
    std::atomic<std::int64_t> examined{0};
    // watchdog for the time limit inside a long level
    std::atomic<bool> level_done{false};
    std::thread watchdog;
    if (config.max_seconds > 0) {
      watchdog = std::thread([&] {
        while (!level_done.load()) {
          if (out_of_time()) {
            stop = true;
            return;
          }
          std::this_thread::sleep_for(std::chrono::milliseconds(20));
        }
      });
    }
    bool complete = false;
    try {
      complete = universe.add_level(leaves, threads, stop, [&](std::uint32_t id) {
        if (universe.white(id) != m || universe.red(id) != redleaf || m < n) return;
        ++examined;
        if (universe.is_target_universal(id)) {
          std::lock_guard lock(found_mutex);
          found.push_back(id);
        }
      });
    } catch (...) {
      level_done = true;
      if (watchdog.joinable()) watchdog.join();
      throw;
    }
    level_done = true;
    if (watchdog.joinable()) watchdog.join();
    report.candidates_examined += examined;
    if (!complete) {
      report.stopped_by = "max_seconds";
      found.clear();
      break;
    }
    if (!found.empty()) {
      report.u_value = m;
      report.authoritative = true;
      break;
    }
  }

  std::map<std::uint32_t, Shape> memo;
  for (auto id : found) report.minimal_shapes.push_back(CanonicalCode{universe.to_shape(id, memo).code()});
  std::sort(report.minimal_shapes.begin(), report.minimal_shapes.end());
  report.minimal_shapes.erase(std::unique(report.minimal_shapes.begin(), report.minimal_shapes.end()),
                              report.minimal_shapes.end());
  report.wall_time = elapsed();
  return report;
}

bool check_depth_conjecture(const SearchReport& report) {
  if (!report.authoritative || report.minimal_shapes.empty()) {
    throw std::invalid_argument("check_depth_conjecture needs a complete search report");
  }
  bool any = false;
  for (const auto& code : report.minimal_shapes) {
    const Shape s = parse_code(code.text, report.d);
    if (!is_universal(s, report.n, report.d, report.redleaf)) {
      throw std::invalid_argument("report lists a shape that is not " + std::to_string(report.n) +
                                  "-universal: " + code.text);
    }
    if (s.height() <= report.n - 1) any = true;
  }
  return any;
}

nlohmann::json to_json(const SearchReport& report) {
  nlohmann::json shapes = nlohmann::json::array();
  for (const auto& c : report.minimal_shapes) shapes.push_back(c.text);
  return {{"n", report.n},
          {"d", report.d},
          {"redleaf", report.redleaf},
          {"u_value", report.u_value},
          {"minimal_shapes", shapes},
          {"count", report.minimal_shapes.size()},
          {"candidates_examined", report.candidates_examined},
          {"wall_time", report.wall_time},
          {"authoritative", report.authoritative},
          {"stopped_by", report.stopped_by}};
}

std::string catalog_text(const SearchReport& report) {
  std::string out;
  for (const auto& c : report.minimal_shapes) out += c.text + "\n";
  return out;
}

std::string format_reports_table(const std::vector<SearchReport>& reports) {
  std::ostringstream out;
  const int w = 5;
  auto row = [&](const std::string& label, auto value) {
    out << std::left << std::setw(10) << label << std::right;
    for (const auto& r : reports) out << std::setw(w) << value(r);
    out << '\n';
  };
  const bool red = !reports.empty() && reports.front().redleaf;
  row("n", [](const SearchReport& r) { return std::to_string(r.n); });
  row("kalmar", [](const SearchReport& r) { return kalmar(r.n).str(); });
  row(red ? "u1(n)" : "u(n)", [](const SearchReport& r) {
    if (!r.authoritative) return std::string("?");
    return std::to_string(r.u_value);
  });
  row("#minimal", [](const SearchReport& r) {
    if (!r.authoritative) return std::string("?");
    return std::to_string(r.minimal_shapes.size());
  });
  return out.str();
}

}  // namespace utk
