#pragma once

#include <stdexcept>
#include <string>

namespace digitop {

// Contract violations: bad dimensions, malformed tables, out-of-range arguments.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A search exceeded its configured budget. Distinguished from `error` so callers
// can tell "refused to answer" from "bad input"; it is never a wrong answer.
class budget_error : public error {
 public:
  explicit budget_error(const std::string& what) : error(what) {}
};

}  // namespace digitop
