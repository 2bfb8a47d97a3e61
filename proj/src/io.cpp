#include "bft/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bft {

namespace {

char hex_digit(int v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_function_text(const TruthTable& f, bool msb_first) {
  const TruthTable table = msb_first ? reverse_vars(f) : f;
  const uint64_t chars = std::max<uint64_t>(1, table.size() / 4);
  std::string hex(chars, '0');
  for (uint64_t p = 0; p < chars; ++p) {
    int nibble = 0;
    for (int b = 0; b < 4; ++b) {
      const uint64_t idx = 4 * p + b;
      if (idx < table.size() && table.bit(idx)) nibble |= 8 >> b;
    }
    hex[p] = hex_digit(nibble);
  }
  return "n " + std::to_string(table.vars()) + "\ntt " + hex + "\n";
}

TruthTable function_from_text(const std::string& text, bool msb_first, int max_vars) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("line 1: expected 'n <count>'");
  std::istringstream l1(line);
  std::string key;
  long long n = 0;
  if (!(l1 >> key >> n) || key != "n") {
    throw std::invalid_argument("line 1: expected 'n <count>'");
  }
  if (n < 1 || n > max_vars) {
    throw std::invalid_argument("line 1: variable count outside [1, " +
                                std::to_string(max_vars) + "]");
  }
  if (!std::getline(in, line)) throw std::invalid_argument("line 2: expected 'tt <hex>'");
  std::istringstream l2(line);
  std::string hex;
  if (!(l2 >> key >> hex) || key != "tt") {
    throw std::invalid_argument("line 2: expected 'tt <hex>'");
  }
  TruthTable t(static_cast<int>(n));
  const uint64_t chars = std::max<uint64_t>(1, t.size() / 4);
  if (hex.size() != chars) {
    throw std::invalid_argument("line 2: expected " + std::to_string(chars) +
                                " hex characters, got " + std::to_string(hex.size()));
  }
  for (uint64_t p = 0; p < chars; ++p) {
    const int v = hex_value(hex[p]);
    if (v < 0) throw std::invalid_argument("line 2: bad hex character");
    for (int b = 0; b < 4; ++b) {
      const uint64_t idx = 4 * p + b;
      if (idx < t.size() && ((v >> (3 - b)) & 1)) t.set_bit(idx, true);
    }
  }
  return msb_first ? reverse_vars(t) : t;
}

TruthTable read_function_file(const std::string& path, bool msb_first, int max_vars) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open function file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return function_from_text(buf.str(), msb_first, max_vars);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_function_file(const std::string& path, const TruthTable& f, bool msb_first) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write function file " + path);
  out << to_function_text(f, msb_first);
}

}  // namespace bft
