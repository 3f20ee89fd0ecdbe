#pragma once

// The .msd diagram file format: one diagram per file, sections in braces,
// '#' comments, ';' separators.
//
//   surface { genus 2 boundary 2 }        # or: surface { genus 1 closed }
//   twist { a2 = t ; b1 = -t^2 }          # optional, monomials +-t^k
//   collection alpha { a1 ; b2 }          # words: whitespace tokens, g or g^-1
//   collection beta  { a2 ; b1 }
//   collection gamma { d1 a1 a2^-1 ; b1 a2^-1 b2 a2^-1 }
//   arcs { e = (0, 0, 0, 0, 1) }          # dual-coordinate integer vectors

#include "msection/diagram.hpp"

#include <stdexcept>
#include <string>

namespace msec {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, std::size_t col, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                             ": " + msg),
          line(line),
          col(col) {}
    std::size_t line, col;
};

MultisectionDiagram parse_diagram(const std::string& text);
MultisectionDiagram parse_diagram_file(const std::string& path);

std::string serialize_diagram(const MultisectionDiagram& d);

}  // namespace msec
