#ifndef KSTAT_FAMILY_IO_HPP_
#define KSTAT_FAMILY_IO_HPP_

#include <optional>

#include "kstat/constructions.hpp"
#include "kstat/types.hpp"

namespace kstat::io {

/// On-disk JSON interchange record:
///   {"n":7,"k":3,"group":"S","ordered":false,"family":[[1,2,3],[1,2,4]]}
/// Points are 1-indexed, inner lists strictly increasing, "k" null for
/// mixed member sizes. Unordered files reject duplicate members.
struct FamilyFile {
  int n = 1;
  std::optional<int> k;
  GroupKind group = GroupKind::Sym;
  bool ordered = false;
  std::vector<std::vector<int>> members;

  SetFamily to_family() const;
  SetSequence to_sequence() const;

  static FamilyFile from_family(const SetFamily& family, GroupKind group);
  static FamilyFile from_sequence(const SetSequence& seq, GroupKind group);
  static FamilyFile from_witness(const constructions::Witness& witness);

  /// Parses and validates; throws std::invalid_argument with a field
  /// diagnostic on malformed input.
  static FamilyFile parse(const std::string& text);
  static FamilyFile load(const std::string& path);

  std::string to_json() const;  // stable key order, single line
  void save(const std::string& path) const;
};

}  // namespace kstat::io

#endif  // KSTAT_FAMILY_IO_HPP_
