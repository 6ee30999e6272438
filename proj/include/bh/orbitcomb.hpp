#pragma once
// Partition combinatorics for nilpotent orbits of so(2n+1) and sp(2n).

#include "bh/heckeop.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bh {

enum class Algebra { B, C };

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive
  int size() const;
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }
  std::string str() const;  // "[3,2,2]"
};

Partition make_partition(std::vector<int> parts);  // sorts, drops zeros
Partition parse_partition(const std::string& s); // "3,2,2", "[3,2,2]", "3^2,1"

struct OrbitLabel {
  Partition p;
  Algebra alg;
  int N;
};

bool is_valid(Algebra a, const Partition& p);
OrbitLabel make_orbit(Algebra a, const Partition& p);  // throws when invalid

std::vector<Partition> partitions_of(int N);  // lex-descending
std::vector<OrbitLabel> enumerate_orbits(Algebra a, int N);

// Exponent b' of A(O) = (Z/2)^{b'} by the rule quoted for sp(2n).
int component_group(const OrbitLabel& o);

Partition transpose(const Partition& p);
bool dominance_leq(const Partition& p, const Partition& r);  // throws on size mismatch

Partition collapse(Algebra a, const Partition& p);              // greedy
Partition collapse_bruteforce(Algebra a, const Partition& p);   // dominance maximum

bool is_special(const OrbitLabel& o);
std::vector<OrbitLabel> special_orbits(Algebra a, int N);
OrbitLabel ls_dual(const OrbitLabel& o);

// i-th largest of one chain paired with the i-th largest of the other.
std::vector<std::pair<Partition, Partition>> beta_match(const std::vector<OrbitLabel>& g,
                                                        const std::vector<OrbitLabel>& lg);

struct FixtureEntry {
  Algebra alg;
  int rank;
  std::string chr;  // character name, or a bipartition "p/q"
  Partition target;
  std::string component;
};
struct SpringerFixture {
  std::vector<FixtureEntry> entries;
  const FixtureEntry* find(Algebra a, int rank, const std::string& chr) const;
};

SpringerFixture parse_fixture(const std::string& text);
SpringerFixture load_fixture(const std::string& path);
std::string default_fixture_path();

struct PipelineTrace {
  Partition springer;  // orbit of the dual group (type B)
  Partition dual;      // its image under the involution
  Partition result;    // matched special orbit of sp(2n)
};
PipelineTrace conjecture_pipeline(const HeckeChar& c, int n, const SpringerFixture& fx);

}  // namespace bh
