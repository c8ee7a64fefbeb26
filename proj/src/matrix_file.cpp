#include "ybsys/matrix_file.hpp"

#include <fstream>
#include <sstream>

namespace ybsys {

namespace {

struct Token {
  std::string text;
  bool quoted = false;
};

std::vector<Token> tokenize(const std::string& line, const std::string& where) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '"') {
      const std::size_t end = line.find('"', i + 1);
      if (end == std::string::npos) throw ParseError(where + ": unterminated quote");
      out.push_back({line.substr(i + 1, end - i - 1), true});
      i = end + 1;
    } else {
      std::size_t end = i;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) && line[end] != '"' &&
             line[end] != '#') {
        ++end;
      }
      out.push_back({line.substr(i, end - i), false});
      i = end;
    }
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (const char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

MatrixFile parse_matrix_file(std::istream& in, const std::string& source) {
  MatrixFile file;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string>* grid = nullptr;
  std::string grid_name;
  bool seen_grid = false;

  const auto where = [&] { return source + ":" + std::to_string(line_no); };
  const auto grid_size = [&] { return file.d * file.d; };
  const auto finish_grid = [&] {
    if (grid != nullptr && grid->size() != grid_size() * grid_size()) {
      throw ParseError(source + ": matrix " + grid_name + " has " + std::to_string(grid->size() / grid_size()) +
                       " complete rows, expected " + std::to_string(grid_size()));
    }
    grid = nullptr;
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line, where());
    if (tokens.empty()) continue;
    if (tokens.front().quoted) {
      if (grid == nullptr) throw ParseError(where() + ": matrix row outside R, Q or basis block");
      if (tokens.size() != grid_size()) {
        throw ParseError(where() + ": expected " + std::to_string(grid_size()) + " entries in row, got " +
                         std::to_string(tokens.size()));
      }
      if (grid->size() == grid_size() * grid_size()) throw ParseError(where() + ": too many rows in " + grid_name);
      for (const auto& t : tokens) {
        if (!t.quoted) throw ParseError(where() + ": matrix entries must be quoted");
        grid->push_back(t.text);
      }
      continue;
    }
    finish_grid();
    const std::string& key = tokens.front().text;
    if (key == "dimension") {
      if (seen_grid) throw ParseError(where() + ": dimension must precede the matrices");
      if (tokens.size() != 2) throw ParseError(where() + ": usage: dimension <d>");
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(tokens[1].text, &used);
        if (used != tokens[1].text.size() || v < 1 || v > 4) throw std::invalid_argument("range");
        file.d = v;
      } catch (const std::exception&) {
        throw ParseError(where() + ": dimension must be an integer in [1, 4]");
      }
    } else if (key == "params") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i].quoted || !is_identifier(tokens[i].text)) {
          throw ParseError(where() + ": bad parameter name '" + tokens[i].text + "'");
        }
        file.params.push_back(tokens[i].text);
      }
    } else if (key == "bind") {
      if (tokens.size() != 3 || tokens[1].quoted || !is_identifier(tokens[1].text) || !tokens[2].quoted) {
        throw ParseError(where() + ": usage: bind <name> \"<expression>\"");
      }
      for (const auto& [name, value] : file.bindings) {
        if (name == tokens[1].text) throw ParseError(where() + ": '" + name + "' bound twice");
      }
      file.bindings.emplace_back(tokens[1].text, tokens[2].text);
    } else if ((key == "R" || key == "Q") && tokens.size() == 1) {
      auto& slot = key == "R" ? file.r : file.q;
      if (slot) throw ParseError(where() + ": " + key + " given twice");
      slot.emplace();
      grid = &*slot;
      grid_name = key;
      seen_grid = true;
    } else if (key == "basis") {
      if (tokens.size() != 2 || tokens[1].quoted || !is_identifier(tokens[1].text)) {
        throw ParseError(where() + ": usage: basis <coordinate>");
      }
      file.basis.emplace_back(tokens[1].text, std::vector<std::string>{});
      grid = &file.basis.back().second;
      grid_name = "basis " + tokens[1].text;
      seen_grid = true;
    } else {
      throw ParseError(where() + ": unknown keyword '" + key + "'");
    }
  }
  finish_grid();
  if (!file.params.empty() && file.has_bindings()) {
    for (const auto& p : file.params) {
      bool bound = false;
      for (const auto& b : file.bindings) bound = bound || b.first == p;
      if (!bound) throw ParseError(source + ": bindings do not cover parameter '" + p + "'");
    }
  }
  return file;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_matrix_file(in, path);
}

std::string quote_grid(const std::vector<std::string>& entries, std::size_t n) {
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << '"' << entries[i] << '"' << ((i + 1) % n == 0 ? "\n" : " ");
  }
  return out.str();
}

std::string write_matrix_file(const MatrixFile& file) {
  std::ostringstream out;
  const std::size_t n = file.d * file.d;
  out << "dimension " << file.d << '\n';
  if (!file.params.empty()) {
    out << "params";
    for (const auto& p : file.params) out << ' ' << p;
    out << '\n';
  }
  for (const auto& [name, value] : file.bindings) out << "bind " << name << " \"" << value << "\"\n";
  if (file.r) out << "R\n" << quote_grid(*file.r, n);
  if (file.q) out << "Q\n" << quote_grid(*file.q, n);
  for (const auto& [name, entries] : file.basis) out << "basis " << name << '\n' << quote_grid(entries, n);
  return out.str();
}

}  // namespace ybsys
