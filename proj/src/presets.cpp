#include "mvkit/presets.hpp"

namespace mvkit {

namespace {

Mat from_rows(std::initializer_list<std::initializer_list<i64>> rows) {
  int n = int(rows.size());
  Mat m(n, n);
  int r = 0;
  for (auto& row : rows) {
    int c = 0;
    for (i64 v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

Mat type_a(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 2;
    if (i + 1 < n) {
      m(i, i + 1) = -1;
      m(i + 1, i) = -1;
    }
  }
  return m;
}

}  // namespace

CartanPair preset_pair(const std::string& name) {
  if (name == "A1") return validate_gcm(type_a(1));
  if (name == "A2") return validate_gcm(type_a(2));
  if (name == "A3") return validate_gcm(type_a(3));
  if (name == "A4") return validate_gcm(type_a(4));
  if (name == "B2") return validate_gcm(from_rows({{2, -1}, {-2, 2}}));
  if (name == "C2") return validate_gcm(from_rows({{2, -2}, {-1, 2}}));
  if (name == "B3") return validate_gcm(from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
  if (name == "C3") return validate_gcm(from_rows({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
  if (name == "D4")
    return validate_gcm(
        from_rows({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));
  if (name == "F4")
    return validate_gcm(
        from_rows({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}));
  if (name == "G2") return validate_gcm(from_rows({{2, -1}, {-3, 2}}));
  fail(errc::bad_input, "unknown preset type: " + name);
}

std::vector<std::string> preset_names() {
  return {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "F4", "G2"};
}

}  // namespace mvkit
