#include "semicat/semigroup_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "semicat/errors.hpp"

namespace semicat {

namespace {

// Lines with comments stripped, paired with their 1-based line numbers.
std::vector<std::pair<int, std::string>> significant_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) out.emplace_back(no, line);
  }
  return out;
}

std::vector<int> parse_int_row(const std::string& line, int lineno) {
  std::istringstream in(line);
  std::vector<int> row;
  std::string tok;
  while (in >> tok) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      row.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(lineno, "expected an integer, got '" + tok + "'");
    }
  }
  return row;
}

std::string map_label(const std::vector<int>& img) {
  std::string out;
  for (size_t i = 0; i < img.size(); ++i) {
    if (i) out += out.size() > 9 ? " " : "";
    out += img[i] < 0 ? std::string("-") : std::to_string(img[i] + 1);
  }
  return out;
}

}  // namespace

FiniteSemigroup parse_cayley_table(const std::string& text, int size_cap) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  auto head = parse_int_row(lines[0].second, lines[0].first);
  if (head.size() != 1 || head[0] <= 0)
    throw ParseError(lines[0].first, "expected the semigroup order");
  int n = head[0];
  if (static_cast<int>(lines.size()) != n + 1)
    throw ParseError(lines.back().first,
                     "expected " + std::to_string(n) + " table rows, got " +
                         std::to_string(lines.size() - 1));
  std::vector<std::vector<int>> table;
  for (int i = 1; i <= n; ++i) {
    auto row = parse_int_row(lines[i].second, lines[i].first);
    if (static_cast<int>(row.size()) != n)
      throw ParseError(lines[i].first, "expected " + std::to_string(n) +
                                           " entries in table row");
    for (int x : row)
      if (x < 0 || x >= n)
        throw ParseError(lines[i].first,
                         "entry " + std::to_string(x) + " outside [0, " +
                             std::to_string(n) + ")");
    table.push_back(std::move(row));
  }
  return FiniteSemigroup::from_table(table, {}, size_cap);
}

FiniteSemigroup semigroup_from_maps(int degree,
                                    std::vector<std::vector<int>> generators,
                                    bool partial, int size_cap) {
  if (generators.empty()) throw InputError("no generators");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      throw InputError("generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v == -1) {
        if (!partial) throw InputError("undefined point in a total map");
        continue;
      }
      if (v < 0 || v >= degree)
        throw IndexOutOfRangeError("map image out of range");
      if (partial) {
        if (seen[v]) throw InputError("partial bijection repeats an image point");
        seen[v] = 1;
      }
    }
  }

  auto compose = [degree](const std::vector<int>& f, const std::vector<int>& g) {
    // Diagrammatic order: x (fg) = (x f) g.
    std::vector<int> h(degree, -1);
    for (int x = 0; x < degree; ++x)
      if (f[x] != -1) h[x] = g[f[x]];
    return h;
  };

  std::vector<std::vector<int>> elems;
  std::map<std::vector<int>, int> index;
  for (auto& g : generators)
    if (index.emplace(g, static_cast<int>(elems.size())).second)
      elems.push_back(g);

  // Plain closure sweep over products, deterministic discovery order.
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      auto p = compose(elems[i], elems[j]);
      if (index.emplace(p, static_cast<int>(elems.size())).second) {
        elems.push_back(p);
        if (static_cast<int>(elems.size()) > size_cap)
          throw CapExceededError("generated semigroup", size_cap);
      }
    }
  }

  int n = static_cast<int>(elems.size());
  std::vector<int> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<size_t>(a) * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) labels.push_back(map_label(e));
  return FiniteSemigroup::from_flat_table(n, std::move(flat), std::move(labels),
                                          size_cap);
}

FiniteSemigroup parse_generators(const std::string& text, int size_cap) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  int degree = -1;
  bool partial = false;
  std::vector<std::vector<int>> gens;
  for (auto& [no, line] : lines) {
    std::istringstream in(line);
    std::string kind;
    in >> kind;
    if (kind != "t" && kind != "p")
      throw ParseError(no, "expected a 't' or 'p' generator line");
    std::string deg_tok;
    in >> deg_tok;
    if (deg_tok.empty() || deg_tok.back() != ':')
      throw ParseError(no, "expected 'degree:' after the generator kind");
    int deg;
    try {
      deg = std::stoi(deg_tok.substr(0, deg_tok.size() - 1));
    } catch (const std::exception&) {
      throw ParseError(no, "bad degree '" + deg_tok + "'");
    }
    if (deg <= 0) throw ParseError(no, "degree must be positive");
    if (degree == -1) degree = deg;
    if (deg != degree) throw ParseError(no, "generator degrees differ");
    if (kind == "p") partial = true;

    std::vector<int> img;
    std::string tok;
    while (in >> tok) {
      if (tok == "-") {
        img.push_back(-1);
      } else {
        try {
          img.push_back(std::stoi(tok) - 1);  // 1-based in the file
        } catch (const std::exception&) {
          throw ParseError(no, "bad image point '" + tok + "'");
        }
      }
    }
    if (static_cast<int>(img.size()) != deg)
      throw ParseError(no, "expected " + std::to_string(deg) + " image points");
    if (kind == "t")
      for (int v : img)
        if (v == -1) throw ParseError(no, "'-' is only allowed in 'p' lines");
    gens.push_back(std::move(img));
  }
  try {
    return semigroup_from_maps(degree, std::move(gens), partial, size_cap);
  } catch (const InputError& e) {
    throw ParseError(lines[0].first, e.what());
  }
}

FiniteSemigroup parse_semigroup(const std::string& text, int size_cap) {
  auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  std::istringstream probe(lines[0].second);
  std::string tok;
  probe >> tok;
  if (tok == "t" || tok == "p") return parse_generators(text, size_cap);
  if (!tok.empty() && (std::isdigit(static_cast<unsigned char>(tok[0]))))
    return parse_cayley_table(text, size_cap);
  throw ParseError(lines[0].first, "unrecognised semigroup format");
}

std::string format_cayley_table(const FiniteSemigroup& s) {
  std::ostringstream out;
  if (s.has_labels()) {
    for (int i = 0; i < s.size(); ++i)
      out << "# " << i << ": " << s.label(i) << "\n";
  }
  out << s.size() << "\n";
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (b) out << ' ';
      out << s.mul(a, b);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace semicat
