#include "mlt/polygon_io.hpp"

#include <fstream>
#include <sstream>

namespace mlt {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

std::pair<Rational, Rational> parse_pair(std::string_view line, std::size_t line_no) {
  const auto parts = split_ws(line);
  if (parts.size() != 2) fail(line_no, "expected two coordinates");
  try {
    return {parse_rational(parts[0]), parse_rational(parts[1])};
  } catch (const Error& e) {
    fail(line_no, e.what());
  }
}

}  // namespace

std::vector<PolygonRecord> parse_polygon_text(std::string_view text) {
  enum class Mode { None, Vertices, Lattice };
  std::vector<PolygonRecord> records;
  std::optional<PolygonRecord> current;
  Mode mode = Mode::None;
  std::vector<Vec2> basis;
  std::size_t line_no = 0;

  auto finish_lattice = [&](std::size_t at) {
    if (mode != Mode::Lattice) return;
    if (basis.size() != 2) fail(at, "lattice needs exactly two basis vectors");
    try {
      current->lattice = Lattice2(basis[0], basis[1]);
    } catch (const Error& e) {
      fail(at, e.what());
    }
    basis.clear();
  };
  auto finish_record = [&](std::size_t at) {
    finish_lattice(at);
    mode = Mode::None;
    if (current) records.push_back(std::move(*current));
    current.reset();
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto line = trim(raw);

    if (line.empty()) {
      finish_record(line_no);
      continue;
    }
    if (line.front() == '#') continue;
    if (line == "vertices:") {
      finish_record(line_no);
      current.emplace();
      mode = Mode::Vertices;
      continue;
    }
    if (!current) fail(line_no, "expected 'vertices:'");
    if (line == "lattice:") {
      finish_lattice(line_no);
      mode = Mode::Lattice;
      continue;
    }
    if (line.starts_with("k:")) {
      finish_lattice(line_no);
      mode = Mode::None;
      const auto value = trim(line.substr(2));
      Rational k;
      try {
        k = parse_rational(value);
      } catch (const Error& e) {
        fail(line_no, e.what());
      }
      if (!is_integer(k)) fail(line_no, "k must be an integer");
      current->k = to_int64(k.get_num());
      continue;
    }
    auto [x, y] = parse_pair(line, line_no);
    if (mode == Mode::Vertices) {
      current->vertices.push_back({std::move(x), std::move(y)});
    } else if (mode == Mode::Lattice) {
      if (basis.size() == 2) fail(line_no, "too many lattice vectors");
      basis.push_back({std::move(x), std::move(y)});
    } else {
      fail(line_no, "coordinates outside a vertices: or lattice: block");
    }
  }
  finish_record(line_no);
  return records;
}

std::vector<PolygonRecord> read_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polygon_text(buf.str());
}

PolygonRecord read_single_polygon(const std::filesystem::path& path) {
  auto records = read_polygon_file(path);
  if (records.size() != 1)
    throw Error(ErrorKind::ParseError, path.string() + ": expected one polygon, found " + std::to_string(records.size()));
  return std::move(records.front());
}

std::string format_point(const Point2& p) { return to_string(p.x) + " " + to_string(p.y); }

std::string format_polygon(const ConvexPolygon& p, const std::optional<Lattice2>& lattice,
                           std::optional<std::int64_t> k) {
  std::string out = "vertices:\n";
  for (const auto& v : p.vertices()) out += format_point(v) + "\n";
  if (lattice && !lattice->is_integer_lattice()) {
    out += "lattice:\n";
    out += to_string(lattice->b1().x) + " " + to_string(lattice->b1().y) + "\n";
    out += to_string(lattice->b2().x) + " " + to_string(lattice->b2().y) + "\n";
  }
  if (k) out += "k: " + std::to_string(*k) + "\n";
  return out;
}

}  // namespace mlt
