#include "netclass/types.hpp"

namespace netclass {

const char* to_string(Category c) {
  switch (c) {
    case Category::Every: return "EVERY";
    case Category::Some: return "SOME";
    case Category::Never: return "NEVER";
  }
  return "?";
}

}  // namespace netclass
