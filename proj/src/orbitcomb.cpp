#include "bh/orbitcomb.hpp"

#include "bh/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace bh {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

Partition make_partition(std::vector<int> parts) {
  for (int x : parts)
    if (x < 0) throw MathError("partition", "negative part");
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.rbegin(), parts.rend());
  return {parts};
}

Partition parse_partition(const std::string& s0) {
  std::string s;
  for (char c : s0)
    if (c != '[' && c != ']' && c != ' ') s += c;
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw MathError("parse", "empty part in '" + s0 + "'");
    try {
      auto caret = tok.find('^');
      int v = std::stoi(tok.substr(0, caret));
      int m = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
      if (m < 0) throw MathError("parse", "negative multiplicity");
      parts.insert(parts.end(), m, v);
    } catch (const std::logic_error&) {
      throw MathError("parse", "bad partition '" + s0 + "'");
    }
  }
  return make_partition(parts);
}

namespace {

std::map<int, int> multiplicities(const Partition& p) {
  std::map<int, int> m;
  for (int x : p.parts) ++m[x];
  return m;
}

const char* alg_name(Algebra a) { return a == Algebra::B ? "B" : "C"; }

}  // namespace

bool is_valid(Algebra a, const Partition& p) {
  int N = p.size();
  if ((a == Algebra::C) != (N % 2 == 0)) return false;
  int bad_parity = a == Algebra::C ? 1 : 0;  // C: odd parts paired, B: even parts
  for (auto [v, m] : multiplicities(p))
    if (v % 2 == bad_parity && m % 2) return false;
  return true;
}

OrbitLabel make_orbit(Algebra a, const Partition& p) {
  if (!is_valid(a, p))
    throw MathError("orbit", p.str() + " is not a type " + alg_name(a) + " partition");
  return {p, a, p.size()};
}

std::vector<Partition> partitions_of(int N) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int left, int maxp) -> void {
    if (left == 0) {
      out.push_back({cur});
      return;
    }
    for (int k = std::min(left, maxp); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  if (N < 0) throw MathError("partition", "negative size");
  rec(rec, N, N);
  return out;
}

std::vector<OrbitLabel> enumerate_orbits(Algebra a, int N) {
  if ((a == Algebra::C) != (N % 2 == 0))
    throw MathError("parity", std::string("type ") + alg_name(a) + " needs " +
                                  (a == Algebra::C ? "even" : "odd") + " N");
  std::vector<OrbitLabel> out;
  for (auto& p : partitions_of(N))  // lex-descending refines dominance
    if (is_valid(a, p)) out.push_back({p, a, N});
  return out;
}

int component_group(const OrbitLabel& o) {
  if (o.alg != Algebra::C) throw MathError("orbit", "component group rule is for type C");
  auto m = multiplicities(o.p);
  int b = int(m.size());
  bool even_even = true;
  for (auto [v, k] : m)
    if (v % 2 == 0 && k % 2) even_even = false;
  return even_even ? b : b - 1;
}

Partition transpose(const Partition& p) {
  std::vector<int> t;
  if (p.parts.empty()) return {};
  for (int j = 1; j <= p.parts.front(); ++j) {
    int c = 0;
    for (int x : p.parts) c += x >= j;
    t.push_back(c);
  }
  return {t};
}

bool dominance_leq(const Partition& p, const Partition& r) {
  if (p.size() != r.size()) throw MathError("dominance", "partitions of different sizes");
  size_t L = std::max(p.parts.size(), r.parts.size());
  int sp = 0, sr = 0;
  for (size_t k = 0; k < L; ++k) {
    sp += k < p.parts.size() ? p.parts[k] : 0;
    sr += k < r.parts.size() ? r.parts[k] : 0;
    if (sp > sr) return false;
  }
  return true;
}

Partition collapse(Algebra a, const Partition& p0) {
  if ((a == Algebra::C) != (p0.size() % 2 == 0))
    throw MathError("parity", "partition size does not match the algebra");
  int bad = a == Algebra::C ? 1 : 0;
  std::vector<int> p = p0.parts;
  while (true) {
    auto m = multiplicities({p});
    int q = -1;
    for (auto it = m.rbegin(); it != m.rend(); ++it)
      if (it->first % 2 == bad && it->second % 2) {
        q = it->first;
        break;
      }
    if (q < 0) break;
    // lower the last q by one, raise the first later part below q-1
    size_t last = 0;
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i] == q) last = i;
    p[last] -= 1;
    size_t j = last + 1;
    while (j < p.size() && p[j] >= q - 1) ++j;
    if (j == p.size()) p.push_back(0);
    p[j] += 1;
    p = make_partition(p).parts;
  }
  return {p};
}

Partition collapse_bruteforce(Algebra a, const Partition& p) {
  std::vector<Partition> below;
  for (auto& r : partitions_of(p.size()))
    if (is_valid(a, r) && dominance_leq(r, p)) below.push_back(r);
  for (auto& r : below) {
    bool top = true;
    for (auto& s : below)
      if (!dominance_leq(s, r)) {
        top = false;
        break;
      }
    if (top) return r;
  }
  throw MathError("collapse", "no unique maximal partition below " + p.str());
}

bool is_special(const OrbitLabel& o) { return is_valid(o.alg, transpose(o.p)); }

std::vector<OrbitLabel> special_orbits(Algebra a, int N) {
  std::vector<OrbitLabel> out;
  for (auto& o : enumerate_orbits(a, N))
    if (is_special(o)) out.push_back(o);
  return out;
}

OrbitLabel ls_dual(const OrbitLabel& o) {
  if (!is_valid(o.alg, o.p)) throw MathError("orbit", "invalid orbit");
  return {collapse(o.alg, transpose(o.p)), o.alg, o.N};
}

std::vector<std::pair<Partition, Partition>> beta_match(const std::vector<OrbitLabel>& g,
                                                        const std::vector<OrbitLabel>& lg) {
  if (g.size() != lg.size())
    throw MathError("beta", "special posets have different cardinalities (" +
                                std::to_string(g.size()) + " vs " + std::to_string(lg.size()) +
                                ")");
  auto chain = [](std::vector<OrbitLabel> v) {
    std::sort(v.begin(), v.end(), [](const OrbitLabel& x, const OrbitLabel& y) {
      return x.p.parts > y.p.parts;
    });
    for (size_t i = 0; i + 1 < v.size(); ++i)
      if (!dominance_leq(v[i + 1].p, v[i].p))
        throw MathError("beta", "special poset is not a chain: " + v[i].p.str() + " and " +
                                    v[i + 1].p.str() + " are incomparable");
    return v;
  };
  auto a = chain(g), b = chain(lg);
  std::vector<std::pair<Partition, Partition>> out;
  for (size_t i = 0; i < a.size(); ++i) out.emplace_back(a[i].p, b[i].p);
  return out;
}

// --- fixtures ----------------------------------------------------------

const FixtureEntry* SpringerFixture::find(Algebra a, int rank, const std::string& chr) const {
  for (auto& e : entries)
    if (e.alg == a && e.rank == rank && e.chr == chr) return &e;
  return nullptr;
}

namespace {

int bipartition_size(const std::string& s) {
  auto slash = s.find('/');
  int total = 0;
  for (auto part : {s.substr(0, slash), s.substr(slash + 1)})
    if (part != "-") total += parse_partition(part).size();
  return total;
}

}  // namespace

SpringerFixture parse_fixture(const std::string& text) {
  SpringerFixture fx;
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::stringstream ls(line);
    std::string type, chr, part, comp;
    int rank = 0;
    if (!(ls >> type)) continue;
    if (!(ls >> rank >> chr >> part >> comp))
      throw MathError("fixture", "line " + std::to_string(lineno) + ": expected 5 fields");
    FixtureEntry e;
    if (type == "B")
      e.alg = Algebra::B;
    else if (type == "C")
      e.alg = Algebra::C;
    else
      throw MathError("fixture", "line " + std::to_string(lineno) + ": type must be B or C");
    e.rank = rank;
    e.chr = chr;
    e.target = parse_partition(part);
    e.component = comp;
    if (chr.find('/') != std::string::npos && bipartition_size(chr) != rank)
      throw MathError("fixture", "line " + std::to_string(lineno) + ": bipartition size != rank");
    int N = e.alg == Algebra::B ? 2 * rank + 1 : 2 * rank;
    if (e.target.size() != N || !is_valid(e.alg, e.target))
      throw MathError("fixture", "line " + std::to_string(lineno) + ": " + e.target.str() +
                                     " is not an orbit of the stated algebra");
    fx.entries.push_back(e);
  }
  return fx;
}

SpringerFixture load_fixture(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw MathError("fixture", "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_fixture(ss.str());
}

std::string default_fixture_path() {
#ifdef BH_DATA_DIR
  return std::string(BH_DATA_DIR) + "/springer.txt";
#else
  return "data/springer.txt";
#endif
}

PipelineTrace conjecture_pipeline(const HeckeChar& c, int n, const SpringerFixture& fx) {
  const FixtureEntry* e = fx.find(Algebra::B, n, c.name);
  if (!e)
    throw MathError("fixture", "no Springer datum for " + c.name + " in type B" +
                                   std::to_string(n));
  PipelineTrace t;
  t.springer = e->target;
  OrbitLabel d = make_orbit(Algebra::B, e->target);
  OrbitLabel img = ls_dual(d);
  t.dual = img.p;
  if (!is_special(img)) throw MathError("pipeline", img.p.str() + " is not special");
  auto pairs = beta_match(special_orbits(Algebra::C, 2 * n), special_orbits(Algebra::B, 2 * n + 1));
  for (auto& [g, lg] : pairs)
    if (lg == img.p) {
      t.result = g;
      return t;
    }
  throw MathError("pipeline", "no partner for " + img.p.str());
}

}  // namespace bh
