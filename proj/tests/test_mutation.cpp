#include <doctest.h>

#include "ckrtm/faults.hpp"
#include "ckrtm/harmonic.hpp"
#include "ckrtm/rtm.hpp"
#include "ckrtm/verify.hpp"

using namespace ckrtm;
using faults::Fault;
using faults::ScopedFault;

namespace {

std::vector<std::string> failing(std::initializer_list<Identity> ids) {
  std::vector<std::string> out;
  for (Identity id : ids) {
    const auto r = verify_identity(id);
    if (!r.passed) out.push_back(r.identity);
  }
  return out;
}

}  // namespace

TEST_CASE("flipping the xx merge sign of diamond is detected") {
  const WordSum clean = diamond(parse_word("x"), parse_word("x"));
  {
    ScopedFault fault(Fault::diamond_xx_sign);
    CHECK(diamond(parse_word("x"), parse_word("x")) != clean);
    const auto bad = failing({Identity::thm1, Identity::prop_FG0, Identity::diamond_letter_y, Identity::lem_tau});
    CHECK_FALSE(bad.empty());
  }
  CHECK(verify_identity(Identity::thm1).passed);
}

TEST_CASE("flipping the sign of G on the single vertex is detected") {
  {
    ScopedFault fault(Fault::g_dot_sign);
    CHECK(g_poly(parse_forest("[]")) == parse_word("y"));
    const auto bad = failing({Identity::thm2, Identity::cor, Identity::prop_FG0});
    CHECK(bad.size() == 3);
  }
  CHECK(g_poly(parse_forest("[]")) == parse_word("-y"));
  CHECK(verify_identity(Identity::cor).passed);
}
