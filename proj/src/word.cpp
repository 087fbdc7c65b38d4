#include "qsurf/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "qsurf/errors.hpp"

namespace qsurf {

namespace {

bool is_separator(char c) {
  return c == ',' || std::isspace(static_cast<unsigned char>(c));
}

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

// Assigns ids in order of first appearance of each name.
class Alphabet {
 public:
  int id_of(const std::string& name) {
    auto [it, inserted] = ids_.try_emplace(name, static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  std::unordered_map<std::string, int> ids_;
};

BoundaryWord parse_compact(std::string_view text, std::size_t begin, std::size_t end) {
  Alphabet alphabet;
  std::vector<OrientedLetter> letters;
  for (std::size_t i = begin; i < end; ++i) {
    const char c = text[i];
    if (!is_alpha(c)) {
      throw ParseError(i, std::string("invalid character '") + c + "'");
    }
    const bool inverse = std::isupper(static_cast<unsigned char>(c));
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    letters.push_back({alphabet.id_of(std::string(1, lower)), inverse ? -1 : +1});
  }
  return BoundaryWord::from_letters(std::move(letters), std::string(text));
}

BoundaryWord parse_long(std::string_view text, std::size_t begin, std::size_t end) {
  Alphabet alphabet;
  std::vector<OrientedLetter> letters;
  std::size_t pos = begin;
  while (pos < end) {
    while (pos < end && is_separator(text[pos])) ++pos;
    if (pos == end) break;

    const std::size_t start = pos;
    if (!is_alpha(text[pos])) {
      throw ParseError(pos, std::string("token must start with a letter, got '") +
                                text[pos] + "'");
    }
    bool has_digit = false;
    bool has_upper = false;
    while (pos < end && (is_alpha(text[pos]) || is_digit(text[pos]))) {
      has_digit |= is_digit(text[pos]);
      has_upper |= static_cast<bool>(std::isupper(static_cast<unsigned char>(text[pos])));
      ++pos;
    }
    const std::string name(text.substr(start, pos - start));
    if (!has_digit && has_upper) {
      throw MixedSyntaxError(start, "compact token '" + name + "' inside a long-form word");
    }

    int sign = +1;
    if (pos < end && text[pos] == '^') {
      if (text.substr(pos, 3) != "^-1") {
        throw ParseError(pos, "expected exponent '^-1'");
      }
      sign = -1;
      pos += 3;
    }
    if (pos < end && !is_separator(text[pos])) {
      throw ParseError(pos, std::string("invalid character '") + text[pos] + "'");
    }
    letters.push_back({alphabet.id_of(name), sign});
  }
  return BoundaryWord::from_letters(std::move(letters), std::string(text));
}

}  // namespace

BoundaryWord BoundaryWord::from_letters(std::vector<OrientedLetter> letters,
                                        std::string source_text) {
  if (letters.empty()) throw InvalidInvariantError("boundary word must be nonempty");

  std::unordered_map<int, int> renumber;
  for (auto& l : letters) {
    if (l.sign != 1 && l.sign != -1) throw InvalidInvariantError("sign must be +1 or -1");
    if (l.letter_id < 0) throw InvalidInvariantError("letter id must be nonnegative");
    auto [it, inserted] = renumber.try_emplace(l.letter_id, static_cast<int>(renumber.size()));
    l.letter_id = it->second;
  }

  BoundaryWord w;
  w.letters_ = std::move(letters);
  w.source_text_ = std::move(source_text);
  w.alphabet_size_ = static_cast<int>(renumber.size());
  return w;
}

BoundaryWord parse_word(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) throw ParseError(0, "empty word");

  const bool long_form = std::any_of(text.begin() + begin, text.begin() + end, [](char c) {
    return is_separator(c) || c == '^' || is_digit(c);
  });
  return long_form ? parse_long(text, begin, end) : parse_compact(text, begin, end);
}

std::string render(const BoundaryWord& word) {
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out << ' ';
    out << 'x' << word[i].letter_id + 1;
    if (word[i].sign < 0) out << "^-1";
  }
  return out.str();
}

std::string render_compact(const BoundaryWord& word) {
  if (word.alphabet_size() > 26) return render(word);
  std::string out;
  for (const auto& l : word.letters()) {
    const char c = static_cast<char>('a' + l.letter_id);
    out.push_back(l.sign > 0 ? c : static_cast<char>(std::toupper(c)));
  }
  return out;
}

BoundaryWord relabel(const BoundaryWord& word, std::span<const int> permutation) {
  if (permutation.size() != static_cast<std::size_t>(word.alphabet_size())) {
    throw InvalidInvariantError("relabel permutation has wrong size");
  }
  std::vector<OrientedLetter> letters(word.letters().begin(), word.letters().end());
  for (auto& l : letters) l.letter_id = permutation[l.letter_id];
  return BoundaryWord::from_letters(std::move(letters));
}

BoundaryWord rotate(const BoundaryWord& word, std::size_t shift) {
  std::vector<OrientedLetter> letters(word.letters().begin(), word.letters().end());
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(shift % letters.size()),
              letters.end());
  return BoundaryWord::from_letters(std::move(letters));
}

BoundaryWord flip_orientation(const BoundaryWord& word) {
  std::vector<OrientedLetter> letters(word.letters().begin(), word.letters().end());
  for (auto& l : letters) l.sign = -l.sign;
  return BoundaryWord::from_letters(std::move(letters));
}

BoundaryWord reverse(const BoundaryWord& word) {
  std::vector<OrientedLetter> letters(word.letters().rbegin(), word.letters().rend());
  return BoundaryWord::from_letters(std::move(letters));
}

PairStructure pair_structure(const BoundaryWord& word) {
  const int L = word.alphabet_size();
  std::vector<std::vector<Occurrence>> seen(L);
  for (std::size_t i = 0; i < word.size(); ++i) {
    seen[word[i].letter_id].push_back({static_cast<int>(i), word[i].sign});
  }

  PairStructure ps;
  ps.N = L;
  for (int id = 0; id < L; ++id) {
    if (seen[id].size() != 2) {
      std::string name = id < 26 ? std::string(1, static_cast<char>('a' + id))
                                 : "x" + std::to_string(id + 1);
      throw NotPairedError("letter " + name + " occurs " + std::to_string(seen[id].size()) +
                           " times; every letter must occur exactly twice");
    }
    ps.occurrences.push_back({seen[id][0], seen[id][1]});
    const bool same = seen[id][0].sign == seen[id][1].sign;
    ps.same_orientation.push_back(same);
    ps.k += same ? 1 : 0;
  }
  return ps;
}

VertexPartition vertex_classes(const PairStructure& ps) {
  const int n = ps.word_length();
  const auto prev = [n](int i) { return (i - 1 + n) % n; };

  DisjointSets sets(n);
  for (const auto& [first, second] : ps.occurrences) {
    const int i = first.position;
    const int j = second.position;
    if (first.sign == second.sign) {
      sets.merge(prev(i), prev(j));
      sets.merge(i, j);
    } else {
      sets.merge(prev(i), j);
      sets.merge(i, prev(j));
    }
  }

  std::vector<std::vector<int>> by_root(n);
  for (int p = 0; p < n; ++p) by_root[sets.find(p)].push_back(p);

  VertexPartition vp;
  for (auto& cls : by_root) {
    if (!cls.empty()) vp.classes.push_back(std::move(cls));
  }
  // Roots are the smallest member, so classes already come out ordered.
  return vp;
}

VertexPartition vertex_classes(const BoundaryWord& word) {
  return vertex_classes(pair_structure(word));
}

int SurfaceClass::k() const {
  if (const auto* p = std::get_if<NonOrientable>(&kind)) return p->k;
  return 0;
}

std::string SurfaceClass::kind_name() const {
  struct {
    std::string operator()(const Orientable&) const { return "orientable"; }
    std::string operator()(const NonOrientable&) const { return "non-orientable"; }
    std::string operator()(const Sphere&) const { return "sphere"; }
    std::string operator()(const Unsupported&) const { return "unsupported"; }
  } visitor;
  return std::visit(visitor, kind);
}

std::string SurfaceClass::describe() const {
  std::ostringstream out;
  if (const auto* o = std::get_if<Orientable>(&kind)) {
    out << "orientable genus " << o->genus << ", invariant (" << N << ",0)";
  } else if (const auto* p = std::get_if<NonOrientable>(&kind)) {
    out << "non-orientable Euler genus " << p->euler_genus << ", invariant (" << N << ","
        << p->k << ")";
  } else if (std::holds_alternative<Sphere>(kind)) {
    out << "sphere, invariant (1,-1)";
  } else {
    return "unsupported: " + std::get<Unsupported>(kind).reason;
  }
  out << ", χ=" << euler_characteristic;
  return out.str();
}

SurfaceClass classify(const BoundaryWord& word) {
  const PairStructure ps = pair_structure(word);
  const VertexPartition vp = vertex_classes(ps);
  const int V = static_cast<int>(vp.count());

  SurfaceClass cls;
  cls.N = ps.N;
  cls.vertex_count = V;

  if (ps.N == 1 && ps.k == 0) {
    cls.kind = Sphere{};
    cls.euler_characteristic = 2;
  } else if (V == 1 && ps.k == 0) {
    if (ps.N % 2 != 0) throw std::logic_error("single-vertex orientable word with odd N");
    cls.kind = Orientable{ps.N / 2};
    cls.euler_characteristic = 2 - ps.N;
  } else if (V == 1) {
    cls.kind = NonOrientable{ps.N, ps.k};
    cls.euler_characteristic = 2 - ps.N;
  } else {
    Unsupported u;
    u.vertex_count = V;
    u.edge_count = ps.N;
    u.cycle_rank = ps.N - V + 1;
    u.reason = std::to_string(V) + " vertex classes; boundary quotient is a graph with V=" +
               std::to_string(V) + ", N=" + std::to_string(ps.N) + " edges, cycle rank " +
               std::to_string(u.cycle_rank) + ", not a wedge of " + std::to_string(ps.N) +
               " circles";
    cls.kind = std::move(u);
    cls.euler_characteristic = V - ps.N + 1;
  }
  return cls;
}

QuantumInvariant quantum_invariant(const SurfaceClass& cls) {
  if (const auto* u = std::get_if<Unsupported>(&cls.kind)) {
    throw UnsupportedWordError("unsupported word: " + u->reason);
  }
  if (std::holds_alternative<Sphere>(cls.kind)) return {1, -1};
  return {cls.N, cls.k()};
}

QuantumInvariant quantum_invariant(const BoundaryWord& word) {
  return quantum_invariant(classify(word));
}

namespace {

// (family, genus) with family 0 orientable, 1 non-orientable, 2 sphere.
std::pair<int, int> homeomorphism_type(const SurfaceClass& cls) {
  if (const auto* u = std::get_if<Unsupported>(&cls.kind)) {
    throw UnsupportedWordError("unsupported word: " + u->reason);
  }
  if (const auto* o = std::get_if<Orientable>(&cls.kind)) return {0, o->genus};
  if (const auto* p = std::get_if<NonOrientable>(&cls.kind)) return {1, p->euler_genus};
  return {2, 0};
}

}  // namespace

bool is_isomorphic(const BoundaryWord& a, const BoundaryWord& b, IsoMode mode) {
  const SurfaceClass ca = classify(a);
  const SurfaceClass cb = classify(b);
  if (mode == IsoMode::Quantum) return quantum_invariant(ca) == quantum_invariant(cb);
  return homeomorphism_type(ca) == homeomorphism_type(cb);
}

}  // namespace qsurf
