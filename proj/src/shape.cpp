#include "utk/shape.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace utk {

struct Shape::Node {
  Color color = Color::white;
  int arity = 2;
  std::vector<Shape> children;
  std::string code;
  int white = 0;
  bool red = false;
  int height = 0;
  int leaves = 0;
  int nodes = 1;
};

namespace {

void check_arity(int d) {
  if (d < 2) throw ShapeError("arity bound must be at least 2");
}

}  // namespace

Shape::Shape() : Shape(leaf()) {}

Shape::Shape(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Shape Shape::leaf(Color color, int arity) {
  check_arity(arity);
  auto n = std::make_shared<Node>();
  n->color = color;
  n->arity = arity;
  n->code = color == Color::white ? "o" : "r";
  n->white = color == Color::white ? 1 : 0;
  n->red = color == Color::red;
  n->leaves = 1;
  return Shape(std::move(n));
}

Shape Shape::join(std::vector<Shape> parts) {
  if (parts.size() < 2) throw ShapeError("join needs at least two parts");
  const int d = parts.front().arity();
  int reds = 0;
  for (const auto& p : parts) {
    if (p.arity() != d) throw ShapeError("join of shapes with different arity bounds");
    if (p.has_red()) ++reds;
  }
  if (static_cast<int>(parts.size()) > d) {
    throw ShapeError("join of " + std::to_string(parts.size()) + " parts exceeds arity " +
                     std::to_string(d));
  }
  if (reds > 1) throw ShapeError("join would create a second red leaf");

  std::stable_sort(parts.begin(), parts.end(), canonical_child_before);

  auto n = std::make_shared<Node>();
  n->arity = d;
  std::size_t len = 2;
  for (const auto& p : parts) len += p.code().size();
  n->code.reserve(len);
  n->code.push_back('(');
  for (const auto& p : parts) {
    n->code += p.code();
    n->white += p.white_leaves();
    n->red = n->red || p.has_red();
    n->height = std::max(n->height, p.height() + 1);
    n->leaves += p.leaf_count();
    n->nodes += p.node_count();
  }
  n->code.push_back(')');
  n->children = std::move(parts);
  return Shape(std::move(n));
}

bool Shape::is_leaf() const { return node_->children.empty(); }
Color Shape::color() const { return node_->color; }
std::span<const Shape> Shape::children() const { return node_->children; }
int Shape::arity() const { return node_->arity; }
int Shape::white_leaves() const { return node_->white; }
bool Shape::has_red() const { return node_->red; }
int Shape::height() const { return node_->height; }
int Shape::leaf_count() const { return node_->leaves; }
int Shape::node_count() const { return node_->nodes; }
const std::string& Shape::code() const { return node_->code; }

Shape Shape::with_arity(int d) const {
  check_arity(d);
  if (d == arity()) return *this;
  if (is_leaf()) return leaf(color(), d);
  std::vector<Shape> parts;
  parts.reserve(node_->children.size());
  for (const auto& c : node_->children) parts.push_back(c.with_arity(d));
  return join(std::move(parts));
}

bool operator==(const Shape& a, const Shape& b) {
  return a.node_ == b.node_ || (a.arity() == b.arity() && a.code() == b.code());
}

bool canonical_child_before(const Shape& a, const Shape& b) { return a.code() > b.code(); }

Shape make_leaf(Color color, int arity) { return Shape::leaf(color, arity); }

Shape join(const Shape& a, const Shape& b) { return Shape::join({a, b}); }

Shape join(std::vector<Shape> parts) { return Shape::join(std::move(parts)); }

Shape graft(const Shape& host, const Shape& scion) {
  if (!host.has_red()) throw ShapeError("graft host has no red leaf");
  if (host.arity() != scion.arity()) throw ShapeError("graft of shapes with different arity bounds");
  if (host.is_leaf()) return scion;
  std::vector<Shape> parts(host.children().begin(), host.children().end());
  for (auto& p : parts) {
    if (p.has_red()) {
      p = graft(p, scion);
      break;
    }
  }
  return join(std::move(parts));
}

Shape caterpillar(int n, int arity) {
  if (n < 1) throw ShapeError("caterpillar needs n >= 1");
  Shape leaf = make_leaf(Color::white, arity);
  Shape c = leaf;
  for (int i = 2; i <= n; ++i) c = join(leaf, c);
  return c;
}

Shape complete(int h, int arity) {
  if (h < 0) throw ShapeError("complete tree needs h >= 0");
  Shape b = make_leaf(Color::white, arity);
  for (int i = 1; i <= h; ++i) b = join(b, b);
  return b;
}

Shape jellyfish(JellyfishSpec spec, int arity) {
  if (spec.h < 0) throw ShapeError("jellyfish needs h >= 0");
  if (spec.ell < 2) throw ShapeError("jellyfish needs ell >= 2");
  Shape j = caterpillar(spec.ell, arity);
  for (int i = 1; i <= spec.h; ++i) j = join(j, j);
  return j;
}

int white_leaf_count(const Shape& s) { return s.white_leaves(); }
int height(const Shape& s) { return s.height(); }
CanonicalCode canonical_code(const Shape& s) { return CanonicalCode{s.code()}; }

namespace {

class CodeReader {
 public:
  CodeReader(std::string_view text, int arity) : text_(text), arity_(arity) {}

  Shape read() {
    Shape s = node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    if (reds_ > 1) throw ParseError("code has more than one red leaf");
    return s;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("malformed code at offset " + std::to_string(pos_) + ": " + what);
  }

  Shape node() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_++];
    if (c == 'o') return make_leaf(Color::white, arity_);
    if (c == 'r') {
      ++reds_;
      if (reds_ > 1) throw ParseError("code has more than one red leaf");
      return make_leaf(Color::red, arity_);
    }
    if (c != '(') fail(std::string("unexpected character '") + c + "'");
    std::vector<Shape> parts;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) fail("unbalanced parenthesis");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      parts.push_back(node());
    }
    if (parts.size() < 2) fail("internal node with fewer than two children");
    if (static_cast<int>(parts.size()) > arity_) {
      throw ParseError("node with " + std::to_string(parts.size()) + " children exceeds arity " +
                       std::to_string(arity_));
    }
    return join(std::move(parts));
  }

  std::string_view text_;
  int arity_;
  std::size_t pos_ = 0;
  int reds_ = 0;
};

class NewickReader {
 public:
  NewickReader(std::string_view text, int arity) : text_(text), arity_(arity) {}

  Shape read() {
    Shape s = node();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ';') ++pos_;
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("malformed Newick at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string label() {
    skip_space();
    std::string out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ',' || c == ')' || c == '(' || c == ';' || c == ':' ||
          std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      out.push_back(c);
      ++pos_;
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      skip_space();
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '.' || text_[pos_] == '-' ||
                                     text_[pos_] == 'e' || text_[pos_] == 'E' ||
                                     text_[pos_] == '+')) {
        ++pos_;
      }
    }
    return out;
  }

  Shape node() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] != '(') {
      std::string name = label();
      if (name == "R") {
        if (++reds_ > 1) throw ParseError("Newick tree has more than one red leaf");
        return make_leaf(Color::red, arity_);
      }
      return make_leaf(Color::white, arity_);
    }
    ++pos_;
    std::vector<Shape> parts;
    parts.push_back(node());
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) fail("unbalanced parenthesis");
      if (text_[pos_] == ',') {
        ++pos_;
        parts.push_back(node());
        continue;
      }
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      fail(std::string("unexpected character '") + text_[pos_] + "'");
    }
    label();  // internal labels are ignored
    if (parts.size() < 2) fail("internal node with fewer than two children");
    if (static_cast<int>(parts.size()) > arity_) {
      throw ParseError("node with " + std::to_string(parts.size()) + " children exceeds arity " +
                       std::to_string(arity_));
    }
    return join(std::move(parts));
  }

  std::string_view text_;
  int arity_;
  std::size_t pos_ = 0;
  int reds_ = 0;
};

void newick_into(const Shape& s, std::string& out) {
  if (s.is_leaf()) {
    out += s.color() == Color::red ? "R" : "x";
    return;
  }
  out.push_back('(');
  bool first = true;
  for (const auto& c : s.children()) {
    if (!first) out.push_back(',');
    first = false;
    newick_into(c, out);
  }
  out.push_back(')');
}

}  // namespace

Shape parse_code(std::string_view text, int arity) {
  check_arity(arity);
  return CodeReader(text, arity).read();
}

std::string to_newick(const Shape& s) {
  std::string out;
  newick_into(s, out);
  out.push_back(';');
  return out;
}

Shape parse_newick(std::string_view text, int arity) {
  check_arity(arity);
  return NewickReader(text, arity).read();
}

Shape parse_shape(std::string_view text, int arity) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty tree text");
  text = text.substr(first);
  auto last = text.find_last_not_of(" \t\r\n");
  text = text.substr(0, last + 1);
  bool newick = text.find_first_of(",;xR") != std::string_view::npos;
  return newick ? parse_newick(text, arity) : parse_code(text, arity);
}

std::string to_dot(const Shape& s, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << graph_name << " {\n";
  out << "  node [label=\"\"];\n";
  int next = 0;
  std::function<int(const Shape&, bool)> emit = [&](const Shape& t, bool root) -> int {
    int id = next++;
    out << "  n" << id << " [";
    if (root) {
      out << "shape=box";
      if (t.is_leaf() && t.color() == Color::red) out << ", style=filled, fillcolor=red";
    } else if (t.is_leaf()) {
      out << "shape=circle";
      if (t.color() == Color::red) out << ", style=filled, fillcolor=red";
    } else {
      out << "shape=point";
    }
    out << "];\n";
    for (const auto& c : t.children()) {
      int child = emit(c, false);
      out << "  n" << id << " -> n" << child << " [arrowhead=none];\n";
    }
    return id;
  };
  emit(s, true);
  out << "}\n";
  return out.str();
}

namespace {

// Appends to `out` every multiset of shapes drawn from `pool` (pool[k] holds
// the white shapes with k leaves) with total `remaining` leaves, between
// `min_parts` and `max_parts` members, listed in nondecreasing (size, index)
// order starting at (`size`, `index`).
void white_multisets(const std::vector<std::vector<Shape>>& pool, int remaining, int min_parts,
                     int max_parts, int size, std::size_t index, std::vector<Shape>& current,
                     const std::function<void(const std::vector<Shape>&)>& emit) {
  if (remaining == 0) {
    if (static_cast<int>(current.size()) >= min_parts) emit(current);
    return;
  }
  if (static_cast<int>(current.size()) >= max_parts) return;
  for (int s = size; s <= remaining; ++s) {
    const auto& level = pool[s];
    for (std::size_t i = (s == size ? index : 0); i < level.size(); ++i) {
      current.push_back(level[i]);
      white_multisets(pool, remaining - s, min_parts, max_parts, s, i, current, emit);
      current.pop_back();
    }
  }
}

std::vector<std::vector<Shape>> white_pool(int n, int d) {
  std::vector<std::vector<Shape>> pool(static_cast<std::size_t>(n) + 1);
  if (n < 1) return pool;
  pool[1].push_back(make_leaf(Color::white, d));
  for (int m = 2; m <= n; ++m) {
    std::vector<Shape> current;
    white_multisets(pool, m, 2, d, 1, 0, current,
                    [&](const std::vector<Shape>& parts) { pool[m].push_back(join(parts)); });
  }
  return pool;
}

}  // namespace

std::vector<Shape> enumerate_shapes(int n, int d, bool redleaf) {
  check_arity(d);
  if (n < 0 || (n == 0 && !redleaf)) throw ShapeError("enumerate_shapes needs n >= 1");
  std::vector<Shape> out;
  if (!redleaf) {
    auto pool = white_pool(n, d);
    out = std::move(pool[n]);
  } else {
    auto pool = white_pool(n, d);
    std::vector<std::vector<Shape>> red(static_cast<std::size_t>(n) + 1);
    red[0].push_back(make_leaf(Color::red, d));
    for (int w = 1; w <= n; ++w) {
      for (int w0 = 0; w0 < w; ++w0) {
        for (const auto& r : red[w0]) {
          std::vector<Shape> current;
          white_multisets(pool, w - w0, 1, d - 1, 1, 0, current,
                          [&](const std::vector<Shape>& whites) {
                            std::vector<Shape> parts = whites;
                            parts.push_back(r);
                            red[w].push_back(join(std::move(parts)));
                          });
        }
      }
    }
    out = std::move(red[n]);
  }
  std::sort(out.begin(), out.end(),
            [](const Shape& a, const Shape& b) { return a.code() < b.code(); });
  return out;
}

namespace {

using Count = unsigned __int128;

Count multichoose(Count types, int k) {
  // binom(types + k - 1, k), exact for the small k used here
  Count r = 1;
  for (int i = 1; i <= k; ++i) r = r * (types + static_cast<Count>(i) - 1) / static_cast<Count>(i);
  return r;
}

// ways[t][p]: multisets of white shapes with total t leaves and p members.
std::vector<std::vector<Count>> multiset_counts(const std::vector<Count>& white, int n, int d) {
  std::vector<std::vector<Count>> ways(static_cast<std::size_t>(n) + 1,
                                       std::vector<Count>(static_cast<std::size_t>(d) + 1, 0));
  ways[0][0] = 1;
  for (int s = 1; s <= n; ++s) {
    if (white[s] == 0) continue;
    auto next = ways;
    for (int t = 0; t <= n; ++t) {
      for (int p = 0; p <= d; ++p) {
        if (ways[t][p] == 0) continue;
        for (int j = 1; p + j <= d && t + j * s <= n; ++j) {
          next[t + j * s][p + j] += ways[t][p] * multichoose(white[s], j);
        }
      }
    }
    ways = std::move(next);
  }
  return ways;
}

}  // namespace

std::uint64_t count_shapes(int n, int d, bool redleaf) {
  check_arity(d);
  if (n < 0 || (n == 0 && !redleaf)) throw ShapeError("count_shapes needs n >= 1");
  std::vector<Count> white(static_cast<std::size_t>(n) + 1, 0);
  if (n >= 1) white[1] = 1;
  for (int m = 2; m <= n; ++m) {
    // white[m] depends only on sizes < m, so recomputing the table per m is exact
    auto ways = multiset_counts(white, m, d);
    Count total = 0;
    for (int p = 2; p <= d; ++p) total += ways[m][p];
    white[m] = total;
  }
  if (!redleaf) return static_cast<std::uint64_t>(white[n]);
  auto ways = multiset_counts(white, n, d);
  std::vector<Count> red(static_cast<std::size_t>(n) + 1, 0);
  red[0] = 1;
  for (int w = 1; w <= n; ++w) {
    for (int w0 = 0; w0 < w; ++w0) {
      Count parts = 0;
      for (int p = 1; p <= d - 1; ++p) parts += ways[w - w0][p];
      red[w] += red[w0] * parts;
    }
  }
  return static_cast<std::uint64_t>(red[n]);
}

std::uint64_t wedderburn_etherington(int n) {
  if (n < 1) return 0;
  std::vector<std::uint64_t> w(static_cast<std::size_t>(n) + 1, 0);
  w[1] = 1;
  for (int m = 2; m <= n; ++m) {
    std::uint64_t total = 0;
    for (int i = 1; 2 * i < m; ++i) total += w[i] * w[m - i];
    if (m % 2 == 0) total += w[m / 2] * (w[m / 2] + 1) / 2;
    w[m] = total;
  }
  return w[n];
}

std::vector<int> leaf_depths(const Shape& s) {
  std::vector<int> out;
  std::function<void(const Shape&, int)> walk = [&](const Shape& t, int depth) {
    if (t.is_leaf()) {
      out.push_back(depth);
      return;
    }
    for (const auto& c : t.children()) walk(c, depth + 1);
  };
  walk(s, 0);
  return out;
}

}  // namespace utk
