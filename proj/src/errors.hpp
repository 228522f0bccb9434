#pragma once

#include <stdexcept>
#include <string>

#include "spherex/spherex.h"

namespace spherex {

// Library-wide exception carrying a C-API status code. The extern-C layer
// catches these and surfaces the code plus the message.
class Error : public std::runtime_error {
 public:
  Error(spherex_status code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  spherex_status code() const { return code_; }

 private:
  spherex_status code_;
};

[[noreturn]] inline void fail(spherex_status code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace spherex
