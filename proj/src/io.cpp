#include "chronos/io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "chronos/error.hpp"

namespace chronos {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool read_uint(std::string_view& s, std::uint64_t& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr == s.data()) return false;
  if (ptr != s.data() + s.size() && !is_space(*ptr)) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::malformed_input, "line " + std::to_string(line) + ": " + why);
}

constexpr std::uint64_t kMaxVertex = 1ULL << 31;

}  // namespace

TemporalGraph parse_edge_list(std::string_view text) {
  std::vector<TimeEdge> edges;
  std::size_t n = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      std::string_view comment = trim(line.substr(hash + 1));
      if (comment.starts_with("n=")) {
        comment.remove_prefix(2);
        std::uint64_t declared = 0;
        if (!read_uint(comment, declared) || !trim(comment).empty() || declared > kMaxVertex) {
          malformed(line_no, "bad vertex count header");
        }
        n = std::max<std::size_t>(n, declared);
      }
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    std::uint64_t u = 0, v = 0, t = 0;
    if (!read_uint(line, u) || !read_uint(line, v) || !read_uint(line, t) || !trim(line).empty()) {
      malformed(line_no, "expected \"u v t\" with non-negative integers");
    }
    if (u >= kMaxVertex || v >= kMaxVertex) malformed(line_no, "vertex id too large");
    if (u == v) throw Error(ErrorCode::loop_edge, "line " + std::to_string(line_no) + ": loop edge");
    if (t < 1) throw Error(ErrorCode::invalid_label, "line " + std::to_string(line_no) + ": label must be >= 1");
    if (t > 0xffffffffULL) malformed(line_no, "label too large");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Time>(t)});
    n = std::max<std::size_t>(n, std::max(u, v) + 1);
  }
  return TemporalGraph::normalized(n, std::move(edges));
}

TemporalGraph read_edge_list(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_any(text);
}

std::string serialize_edge_list(const TemporalGraph& g) {
  std::ostringstream out;
  out << "# n=" << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.t << '\n';
  return out.str();
}

TemporalGraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::malformed_input, std::string("json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorCode::malformed_input, "json: expected an object with an \"edges\" array");
  }
  std::size_t n = 0;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_unsigned() || doc["n"].get<std::uint64_t>() > kMaxVertex) {
      throw Error(ErrorCode::malformed_input, "json: \"n\" must be a non-negative integer");
    }
    n = doc["n"].get<std::size_t>();
  }
  std::vector<TimeEdge> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 3) {
      throw Error(ErrorCode::malformed_input, "json: each edge must be [u, v, t]");
    }
    for (const auto& x : item) {
      if (!x.is_number_integer()) throw Error(ErrorCode::malformed_input, "json: edge entries must be integers");
    }
    const auto u = item[0].get<std::int64_t>();
    const auto v = item[1].get<std::int64_t>();
    const auto t = item[2].get<std::int64_t>();
    if (u < 0 || v < 0 || static_cast<std::uint64_t>(u) >= kMaxVertex || static_cast<std::uint64_t>(v) >= kMaxVertex) {
      throw Error(ErrorCode::malformed_input, "json: vertex id out of range");
    }
    if (u == v) throw Error(ErrorCode::loop_edge, "json: loop edge");
    if (t < 1 || t > 0xffffffffLL) throw Error(ErrorCode::invalid_label, "json: label must be >= 1");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Time>(t)});
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  return TemporalGraph::normalized(n, std::move(edges));
}

std::string serialize_json(const TemporalGraph& g) {
  nlohmann::json doc;
  doc["n"] = g.vertex_count();
  doc["T"] = g.lifetime();
  auto& arr = doc["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) arr.push_back({e.u, e.v, e.t});
  return doc.dump();
}

TemporalGraph parse_any(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return parse_json(text);
    break;
  }
  return parse_edge_list(text);
}

}  // namespace chronos
