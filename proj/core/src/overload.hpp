#pragma once

namespace ttable {

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};

}  // namespace ttable
