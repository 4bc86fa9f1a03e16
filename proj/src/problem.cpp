/*
 Copyright 2026 The singular-sos Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "singular_sos/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace singular_sos {

namespace {

struct Statement {
  std::string text;
  std::size_t offset = 0;  ///< offset of text[0] in the source
};

struct Source {
  std::string_view text;

  std::pair<std::size_t, std::size_t> locate(std::size_t offset) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
    auto [line, col] = locate(offset);
    throw ProblemParseError(msg, line, col);
  }
};

std::vector<Statement> split_statements(const Source& src) {
  std::string_view text = src.text;
  std::vector<Statement> out;
  Statement cur;
  bool started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '#') {
      while (i + 1 < text.size() && text[i + 1] != '\n') ++i;
      continue;
    }
    if (ch == ';') {
      while (!cur.text.empty() && cur.text.back() == ' ') cur.text.pop_back();
      out.push_back(cur);
      cur = {};
      started = false;
      continue;
    }
    if (!started) {
      if (std::isspace(static_cast<unsigned char>(ch))) continue;
      started = true;
      cur.offset = i;
    }
    cur.text += std::isspace(static_cast<unsigned char>(ch)) ? ' ' : ch;
  }
  if (started) src.fail("missing ';' after statement", cur.offset);
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool starts_with_word(const std::string& s, std::string_view word) {
  if (s.compare(0, word.size(), word) != 0) return false;
  return s.size() == word.size() || std::isspace(static_cast<unsigned char>(s[word.size()]));
}

}  // namespace

Problem parse_problem(std::string_view text) {
  Source src{text};
  Problem p;
  bool have_vars = false, have_objective = false;
  std::vector<Polynomial> inequalities;
  std::string objective_text;
  std::size_t objective_offset = 0;

  struct Pending {
    std::string lhs, rhs, op;
    std::size_t lhs_offset, rhs_offset;
  };
  std::vector<Pending> pending;

  for (const auto& st : split_statements(src)) {
    const std::string& s = st.text;
    if (s.empty()) continue;
    if (starts_with_word(s, "vars")) {
      if (have_vars) src.fail("duplicate 'vars' statement", st.offset);
      have_vars = true;
      std::string rest = s.substr(4);
      std::replace(rest.begin(), rest.end(), ',', ' ');
      std::istringstream in(rest);
      std::string name;
      while (in >> name) {
        std::size_t at = st.offset + s.find(name, 4);
        if (!valid_name(name)) src.fail("invalid variable name '" + name + "'", at);
        if (std::find(p.variables.begin(), p.variables.end(), name) != p.variables.end())
          src.fail("duplicate variable '" + name + "'", at);
        p.variables.push_back(name);
      }
      if (p.variables.empty()) src.fail("'vars' declares no variables", st.offset);
    } else if (starts_with_word(s, "minimize")) {
      if (have_objective) src.fail("duplicate 'minimize' statement", st.offset);
      have_objective = true;
      objective_offset = st.offset + 8;
      objective_text = s.substr(8);
    } else if (s.rfind("subject to", 0) == 0 && (s.size() == 10 || s[10] == ' ')) {
      std::string body = s.substr(10);
      std::size_t base = st.offset + 10;
      std::size_t pos;
      std::string op;
      if ((pos = body.find(">=")) != std::string::npos)
        op = ">=";
      else if ((pos = body.find("<=")) != std::string::npos)
        op = "<=";
      else if ((pos = body.find('=')) != std::string::npos)
        op = "=";
      else
        src.fail("constraint needs '=', '>=' or '<='", st.offset);
      if (body.find_first_of("<>=", pos + op.size()) != std::string::npos)
        src.fail("constraint has more than one relation", base + pos);
      pending.push_back({body.substr(0, pos), body.substr(pos + op.size()), op, base, base + pos + op.size()});
    } else {
      src.fail("unknown statement '" + s.substr(0, s.find(' ')) + "'", st.offset);
    }
  }
  if (!have_vars) src.fail("missing 'vars' statement", 0);
  if (!have_objective) src.fail("missing 'minimize' statement", 0);

  auto parse = [&](const std::string& t, std::size_t offset) {
    if (t.find_first_not_of(' ') == std::string::npos) src.fail("empty expression", offset);
    try {
      return poly_parse(t, p.variables);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at position"));
      src.fail(msg, offset + e.position());
    }
  };

  p.declared = p.variables.size();
  p.objective = parse(objective_text, objective_offset);
  for (const auto& c : pending) {
    Polynomial lhs = parse(c.lhs, c.lhs_offset), rhs = parse(c.rhs, c.rhs_offset);
    if (c.op == "=")
      p.constraints.push_back(lhs - rhs);
    else
      inequalities.push_back(c.op == ">=" ? lhs - rhs : rhs - lhs);
  }

  if (!inequalities.empty()) {
    std::size_t next = 1;
    std::vector<std::string> slacks;
    for (std::size_t j = 0; j < inequalities.size(); ++j) {
      std::string name;
      do {
        name = "z" + std::to_string(next++);
      } while (std::find(p.variables.begin(), p.variables.end(), name) != p.variables.end());
      slacks.push_back(name);
    }
    const std::size_t N = p.declared + slacks.size();
    p.variables.insert(p.variables.end(), slacks.begin(), slacks.end());
    p.objective = p.objective.extended(N);
    for (auto& g : p.constraints) g = g.extended(N);
    for (std::size_t j = 0; j < inequalities.size(); ++j) {
      Polynomial z = Polynomial::variable(N, p.declared + j);
      p.constraints.push_back(inequalities[j].extended(N) - z * z);
    }
  }
  return p;
}

Problem read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

std::string format_problem(const Problem& p) {
  std::ostringstream out;
  out << "vars";
  for (const auto& v : p.variables) out << ' ' << v;
  out << ";\nminimize " << poly_format(p.objective, p.variables) << ";\n";
  for (const auto& g : p.constraints) out << "subject to " << poly_format(g, p.variables) << " = 0;\n";
  return out.str();
}

}  // namespace singular_sos
