#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "hamint/complex.hpp"
#include "hamint/errors.hpp"

namespace hamint {

namespace {

std::vector<int> parse_ints(const std::string& line, int line_no) {
  std::vector<int> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(line_no, "expected an integer, found '" + tok + "'");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int d = 0, n = 0;
  std::vector<Face> facets;
  std::set<VertexMask> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<int> nums = parse_ints(line, line_no);
    if (nums.empty()) continue;
    if (!have_header) {
      if (nums.size() != 2) throw ParseError(line_no, "header must be 'd n'");
      d = nums[0];
      n = nums[1];
      if (d < 1) throw ParseError(line_no, "dimension must be at least 1");
      if (n < d + 1 || n > kMaxVertices) throw ParseError(line_no, "vertex count must lie in d+1..64");
      have_header = true;
      continue;
    }
    if (static_cast<int>(nums.size()) != d + 1) {
      throw ParseError(line_no, "facet has " + std::to_string(nums.size()) + " vertices, expected " + std::to_string(d + 1));
    }
    for (std::size_t i = 0; i < nums.size(); ++i) {
      if (nums[i] < 1 || nums[i] > n) throw ParseError(line_no, "vertex " + std::to_string(nums[i]) + " outside 1.." + std::to_string(n));
      if (i > 0 && nums[i] <= nums[i - 1]) throw ParseError(line_no, "facet vertices must be strictly increasing");
    }
    Face f{std::span<const int>(nums)};
    if (!seen.insert(f.mask()).second) throw ParseError(line_no, "duplicate facet {" + f.to_string() + "}");
    facets.push_back(f);
  }
  if (!have_header) throw ParseError(line_no, "missing 'd n' header");
  return Complex(n, d, std::move(facets));
}

Complex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

std::string format_complex(const Complex& c) {
  std::string out = std::to_string(c.d()) + " " + std::to_string(c.n()) + "\n";
  for (const Face& f : c.facets()) out += f.to_string() + "\n";
  return out;
}

Labeling parse_labeling(const std::string& text, int n) {
  std::vector<Vertex> images;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    int value = 0;
    auto first = tok.find_first_not_of(' ');
    auto last = tok.find_last_not_of(' ');
    if (first == std::string::npos) throw RangeError("empty entry in labeling");
    std::string t = tok.substr(first, last - first + 1);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) throw RangeError("labeling entry '" + t + "' is not an integer");
    images.push_back(value);
  }
  if (static_cast<int>(images.size()) != n) {
    throw RangeError("labeling has " + std::to_string(images.size()) + " entries, expected " + std::to_string(n));
  }
  return Labeling::from_images(std::move(images));
}

}  // namespace hamint
