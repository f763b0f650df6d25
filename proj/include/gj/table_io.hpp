#ifndef GJ_TABLE_IO_HPP
#define GJ_TABLE_IO_HPP

#include <memory>
#include <string>

#include "gj/group.hpp"

namespace gj {

// Serializes a table as {"order": n, "mul": [...row-major...], "label": "..."}.
std::string table_to_json(const GroupTable& g);

// Parses and validates a table document: group laws exactly, associativity
// by 10,000 sampled triples (fixed seed).
std::shared_ptr<const GroupTable> table_from_json(const std::string& text);

}  // namespace gj

#endif
