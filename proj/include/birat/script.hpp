#pragma once

#include <map>
#include <string>
#include <vector>

#include "birat/rational_map.hpp"

namespace birat {

// A parsed session: ring and map declarations, in order, plus commands
// written as statements. Declarations are validated while parsing, so every
// stored presentation and map is already checked.
struct SessionScript {
  struct Command {
    std::string name;
    std::vector<std::string> args;
    int line = 1;
    int col = 1;
  };

  std::vector<std::string> ring_names;
  std::map<std::string, Variety> rings;
  std::vector<std::string> map_names;
  std::map<std::string, RationalMap> maps;
  std::vector<Command> commands;

  const Variety& ring(const std::string& name) const;
  const RationalMap& map(const std::string& name) const;
};

// Grammar:
//   ring NAME = FIELD[v1, ..., vk] (/ (g1, ..., gr))? ;
//   map NAME : RING -> RING = [f1, ..., fm] ;
//   command-name arg ... ;
// with FIELD one of QQ, GF(p). Commands may also come from the command line
// instead of statements. Failures carry line and column.
SessionScript parse_script(const std::string& text);

}  // namespace birat
