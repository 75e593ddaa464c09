#include "qsr/ring_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qsr/error.hpp"

namespace qsr {
namespace {

using nlohmann::json;

Table read_table(const json& doc, const char* key, std::size_t order) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw Error(Errc::ParseError, std::string("\"") + key + "\" must be an array of arrays");
  }
  Table t;
  for (const json& row : doc[key]) {
    if (!row.is_array()) throw Error(Errc::ParseError, std::string(key) + " row is not an array");
    std::vector<Element> out;
    for (const json& v : row) {
      if (!v.is_number_integer()) {
        throw Error(Errc::ParseError, std::string(key) + " entry is not an integer");
      }
      const auto x = v.get<long long>();
      if (x < 0 || static_cast<unsigned long long>(x) >= order) {
        throw Error(Errc::ParseError, std::string(key) + "[" + std::to_string(t.size()) + "][" +
                                          std::to_string(out.size()) + "] = " +
                                          std::to_string(x) + " is out of range for order " +
                                          std::to_string(order));
      }
      out.push_back(static_cast<Element>(x));
    }
    t.push_back(std::move(out));
  }
  return t;
}

// Swaps element indices 0 and z in a table (z is an involution partner).
void swap_indices(Table& t, Element z) {
  auto p = [z](Element x) -> Element { return x == 0 ? z : (x == z ? 0 : x); };
  Table out = t;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) out[a][b] = p(t[p(a)][p(b)]);
  t = std::move(out);
}

bool is_square(const Table& t, std::size_t order) {
  if (t.size() != order) return false;
  for (const auto& row : t) {
    if (row.size() != order) return false;
  }
  return true;
}

std::optional<Element> find_additive_identity(const Table& add) {
  for (std::size_t z = 0; z < add.size(); ++z) {
    bool ok = true;
    for (std::size_t i = 0; i < add.size() && ok; ++i) ok = add[z][i] == i;
    if (ok) return static_cast<Element>(z);
  }
  return std::nullopt;
}

void write_table(std::ostringstream& os, const Table& t) {
  os << "[\n";
  for (std::size_t a = 0; a < t.size(); ++a) {
    os << "    [";
    for (std::size_t b = 0; b < t[a].size(); ++b) os << (b ? ", " : "") << t[a][b];
    os << "]" << (a + 1 < t.size() ? "," : "") << "\n";
  }
  os << "  ]";
}

}  // namespace

FiniteRing load_ring(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::ParseError, "ring document must be a JSON object");
  if (!doc.contains("name") || !doc["name"].is_string()) {
    throw Error(Errc::ParseError, "\"name\" must be a string");
  }
  if (!doc.contains("order") || !doc["order"].is_number_integer() || doc["order"].get<long long>() < 1) {
    throw Error(Errc::ParseError, "\"order\" must be a positive integer");
  }
  const auto order = static_cast<std::size_t>(doc["order"].get<long long>());
  Table add = read_table(doc, "add", order);
  Table mul = read_table(doc, "mul", order);
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw Error(Errc::ParseError, "\"labels\" must be an array");
    for (const json& l : doc["labels"]) {
      if (!l.is_string()) throw Error(Errc::ParseError, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }

  if (is_square(add, order) && is_square(mul, order)) {
    if (auto z = find_additive_identity(add); z && *z != 0) {
      swap_indices(add, *z);
      swap_indices(mul, *z);
      if (labels.size() == order) std::swap(labels[0], labels[*z]);
    }
  }
  return validate_ring(order, add, mul, doc["name"].get<std::string>(), std::move(labels));
}

FiniteRing load_ring_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || std::filesystem::is_directory(path)) throw Error(Errc::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_ring(buf.str());
}

std::string save_ring(const FiniteRing& ring) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << json(ring.name()).dump() << ",\n";
  os << "  \"order\": " << ring.order() << ",\n";
  os << "  \"add\": ";
  write_table(os, ring.add_table());
  os << ",\n  \"mul\": ";
  write_table(os, ring.mul_table());
  if (!ring.labels().empty()) os << ",\n  \"labels\": " << json(ring.labels()).dump();
  os << "\n}\n";
  return os.str();
}

}  // namespace qsr
