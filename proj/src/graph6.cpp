#include "sslab/graph6.hpp"

#include <istream>
#include <ostream>

#include "sslab/errors.hpp"

namespace sslab {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw capacity_error("graph6 short form supports n <= 62");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  if (text.empty()) throw parse_error("empty graph6 string", 0);
  for (std::size_t k = 0; k < text.size(); ++k) {
    const unsigned char c = static_cast<unsigned char>(text[k]);
    if (c < 63 || c > 126) throw parse_error("graph6 character outside 63..126", k);
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > 62) throw parse_error("graph6 long form (n > 62) is not supported", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = 1 + (bits + 5) / 6;
  if (text.size() < need) throw parse_error("truncated graph6 bit vector", text.size());
  if (text.size() > need) throw parse_error("trailing bytes after graph6 bit vector", need);

  std::vector<Bits> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  return Graph::from_rows(n, rows);
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) {
      try {
        out.push_back(graph6_decode(line));
      } catch (const parse_error& e) {
        throw parse_error("graph6 line " + std::to_string(out.size() + 1) + ": " + e.what(),
                          offset + e.offset());
      }
    }
    offset += line.size() + 1;
  }
  return out;
}

void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << graph6_encode(g) << '\n';
}

}  // namespace sslab
