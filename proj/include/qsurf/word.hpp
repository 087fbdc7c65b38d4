#pragma once

// Boundary words: parsing, pair structure, endpoint identification and
// classification of the surface obtained by gluing arcs of the disk boundary.

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qsurf {

struct OrientedLetter {
  int letter_id = 0;
  int sign = +1;  // +1 traversed with the circle, -1 against it

  friend bool operator==(const OrientedLetter&, const OrientedLetter&) = default;
};

/// Cyclic sequence of oriented letters read counterclockwise around the
/// boundary circle. Letter ids are always renumbered to order of first
/// appearance, so two words that differ only by a relabeling compare equal.
class BoundaryWord {
 public:
  BoundaryWord() = default;

  /// Throws InvalidInvariantError on an empty sequence, a sign outside
  /// {+1,-1} or a negative id.
  static BoundaryWord from_letters(std::vector<OrientedLetter> letters,
                                   std::string source_text = {});

  std::span<const OrientedLetter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  const OrientedLetter& operator[](std::size_t i) const { return letters_[i]; }
  int alphabet_size() const { return alphabet_size_; }
  const std::string& source_text() const { return source_text_; }

  friend bool operator==(const BoundaryWord& a, const BoundaryWord& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<OrientedLetter> letters_;
  std::string source_text_;
  int alphabet_size_ = 0;
};

/// Accepts the compact form ("abAB", uppercase = inverse) and the long form
/// ("a1 b1 a1^-1 b1^-1", whitespace or comma separated).
BoundaryWord parse_word(std::string_view text);

/// Canonical long form: letter i is written x{i+1}.
std::string render(const BoundaryWord& word);

/// Compact form when the alphabet fits in a..z, otherwise the long form.
std::string render_compact(const BoundaryWord& word);

// Word transformations that leave the quantum invariant unchanged.
BoundaryWord relabel(const BoundaryWord& word, std::span<const int> permutation);
BoundaryWord rotate(const BoundaryWord& word, std::size_t shift);
BoundaryWord flip_orientation(const BoundaryWord& word);
BoundaryWord reverse(const BoundaryWord& word);

struct Occurrence {
  int position = 0;
  int sign = +1;
};

struct PairStructure {
  int N = 0;
  int k = 0;
  std::vector<std::array<Occurrence, 2>> occurrences;  // indexed by letter id
  std::vector<bool> same_orientation;

  int word_length() const { return 2 * N; }
};

/// Throws NotPairedError unless every letter occurs exactly twice.
PairStructure pair_structure(const BoundaryWord& word);

/// Partition of the arc endpoints. Endpoint P_i sits between arc i and arc
/// i+1 (cyclically).
struct VertexPartition {
  std::vector<std::vector<int>> classes;  // each sorted, ordered by smallest

  std::size_t count() const { return classes.size(); }
};

VertexPartition vertex_classes(const PairStructure& ps);
VertexPartition vertex_classes(const BoundaryWord& word);

struct Orientable {
  int genus = 0;
};
struct NonOrientable {
  int euler_genus = 0;
  int k = 0;
};
struct Sphere {};
struct Unsupported {
  int vertex_count = 0;
  int edge_count = 0;
  int cycle_rank = 0;
  std::string reason;
};

struct SurfaceClass {
  std::variant<Orientable, NonOrientable, Sphere, Unsupported> kind;
  int N = 0;
  int euler_characteristic = 0;
  int vertex_count = 0;

  bool supported() const { return !std::holds_alternative<Unsupported>(kind); }
  /// Same-orientation pair count; 0 for orientable and sphere classes.
  int k() const;
  std::string kind_name() const;
  std::string describe() const;
};

SurfaceClass classify(const BoundaryWord& word);

struct QuantumInvariant {
  int N = 0;
  int k = 0;

  friend bool operator==(const QuantumInvariant&, const QuantumInvariant&) = default;
  friend auto operator<=>(const QuantumInvariant&, const QuantumInvariant&) = default;
};

/// The sphere maps to the sentinel (1, -1).
QuantumInvariant quantum_invariant(const SurfaceClass& cls);
QuantumInvariant quantum_invariant(const BoundaryWord& word);

enum class IsoMode { Classical, Quantum };

bool is_isomorphic(const BoundaryWord& a, const BoundaryWord& b, IsoMode mode);

}  // namespace qsurf
