#include "gj/table_io.hpp"

#include <json.hpp>

namespace gj {

std::string table_to_json(const GroupTable& g) {
  nlohmann::json j;
  j["order"] = g.order();
  j["mul"] = g.mul_table();
  j["label"] = g.label();
  return j.dump();
}

std::shared_ptr<const GroupTable> table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw InvalidTable(std::string("table document is not valid JSON: ") + e.what());
  }
  if (!j.contains("order") || !j.contains("mul"))
    throw InvalidTable("table document needs 'order' and 'mul'");
  std::size_t order = j["order"].get<std::size_t>();
  std::vector<Elt> mul;
  for (const auto& v : j["mul"]) {
    std::size_t e = v.get<std::size_t>();
    if (e >= order) throw InvalidTable("table entry out of range");
    mul.push_back(static_cast<Elt>(e));
  }
  std::string label = j.value("label", std::string("loaded"));
  auto table = std::make_shared<GroupTable>(
      GroupTable::from_mul(order, std::move(mul), std::move(label)));
  if (!table->check_associativity_sampled(10000))
    throw InvalidTable("sampled associativity check failed");
  return table;
}

}  // namespace gj
