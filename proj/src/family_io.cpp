#include "kstat/family_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kstat::io {

namespace {

using nlohmann::json;

std::optional<int> uniform_size(const std::vector<std::vector<int>>& members) {
  if (members.empty()) return std::nullopt;
  const int k = static_cast<int>(members.front().size());
  for (const auto& m : members)
    if (static_cast<int>(m.size()) != k) return std::nullopt;
  return k;
}

std::vector<Subset> to_subsets(const FamilyFile& file) {
  std::vector<Subset> out;
  out.reserve(file.members.size());
  for (std::size_t i = 0; i < file.members.size(); ++i) {
    try {
      out.emplace_back(file.n, file.members[i]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("family[" + std::to_string(i) +
                                  "]: " + e.what());
    }
  }
  return out;
}

}  // namespace

SetFamily FamilyFile::to_family() const {
  return SetFamily(n, to_subsets(*this));
}

SetSequence FamilyFile::to_sequence() const {
  return SetSequence(n, to_subsets(*this));
}

FamilyFile FamilyFile::from_family(const SetFamily& family, GroupKind group) {
  FamilyFile out;
  out.n = family.n();
  out.group = group;
  out.ordered = false;
  for (const Subset& m : family.members()) out.members.push_back(m.elements());
  out.k = uniform_size(out.members);
  return out;
}

FamilyFile FamilyFile::from_sequence(const SetSequence& seq, GroupKind group) {
  FamilyFile out;
  out.n = seq.n();
  out.group = group;
  out.ordered = true;
  for (const Subset& m : seq.members()) out.members.push_back(m.elements());
  out.k = uniform_size(out.members);
  return out;
}

FamilyFile FamilyFile::from_witness(const constructions::Witness& witness) {
  return witness.is_sequence()
             ? from_sequence(witness.sequence(), witness.kind)
             : from_family(witness.family(), witness.kind);
}

FamilyFile FamilyFile::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("top level must be an object");

  FamilyFile out;
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("field \"n\" must be an integer");
  out.n = j["n"].get<int>();
  if (out.n < 1) throw std::invalid_argument("field \"n\" must be >= 1");

  if (!j.contains("group") || !j["group"].is_string())
    throw std::invalid_argument("field \"group\" must be \"S\" or \"A\"");
  const auto kind = group_from_code(j["group"].get<std::string>());
  if (!kind)
    throw std::invalid_argument("field \"group\" must be \"S\" or \"A\"");
  out.group = *kind;

  if (!j.contains("ordered") || !j["ordered"].is_boolean())
    throw std::invalid_argument("field \"ordered\" must be a boolean");
  out.ordered = j["ordered"].get<bool>();

  if (j.contains("k") && !j["k"].is_null()) {
    if (!j["k"].is_number_integer())
      throw std::invalid_argument("field \"k\" must be an integer or null");
    out.k = j["k"].get<int>();
  }

  if (!j.contains("family") || !j["family"].is_array())
    throw std::invalid_argument("field \"family\" must be an array of arrays");
  for (std::size_t i = 0; i < j["family"].size(); ++i) {
    const auto& entry = j["family"][i];
    if (!entry.is_array())
      throw std::invalid_argument("family[" + std::to_string(i) +
                                  "] must be an array of points");
    std::vector<int> member;
    for (const auto& v : entry) {
      if (!v.is_number_integer())
        throw std::invalid_argument("family[" + std::to_string(i) +
                                    "] must contain integers only");
      member.push_back(v.get<int>());
    }
    out.members.push_back(std::move(member));
  }

  if (out.k)
    for (std::size_t i = 0; i < out.members.size(); ++i)
      if (static_cast<int>(out.members[i].size()) != *out.k)
        throw std::invalid_argument("family[" + std::to_string(i) +
                                    "] has size != k");

  // Validation of ranges, ordering and duplicates via the domain types.
  if (out.ordered)
    out.to_sequence();
  else
    out.to_family();
  return out;
}

FamilyFile FamilyFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string FamilyFile::to_json() const {
  json j;
  j["n"] = n;
  if (k)
    j["k"] = *k;
  else
    j["k"] = nullptr;
  j["group"] = group_code(group);
  j["ordered"] = ordered;
  j["family"] = members;
  return j.dump();
}

void FamilyFile::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << to_json() << "\n";
}

}  // namespace kstat::io
