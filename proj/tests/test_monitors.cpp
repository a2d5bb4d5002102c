#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eqmon/monitors.hpp"

using namespace eqmon;

namespace {

MonitorReport run(const std::string& name, size_t site_stride = 1, size_t slot_stride = 1,
                  bool all_zeta = true) {
  MonitorParams params;
  params.n = 2;
  params.all_zeta = all_zeta;
  params.site_stride = site_stride;
  params.slot_stride = slot_stride;
  MonitorReport rep = monitor_lemma(name, params);
  CHECK(rep.instances > 0);
  for (const MonitorViolation& v : rep.violations) {
    FAIL_CHECK(rep.name << " violated at " << v.instance << ": " << v.detail);
  }
  return rep;
}

}  // namespace

TEST_CASE("monitor registry") {
  CHECK(monitor_names().size() == 10);
  CHECK_THROWS_AS(monitor_lemma("no_such_lemma"), error);
}

TEST_CASE("whole-word replacement sweep") {
  MonitorReport rep = run("directly");
  CHECK(rep.instances == 4);
  CHECK(rep.checks == 12);  // one nontrivial result per ordered pair
}

TEST_CASE("one-step rewrites stay in the family") {
  run("fic_class");
}

TEST_CASE("replacement words admit no nontrivial step") {
  MonitorReport rep = run("three_isoterms", 1, 4, false);
  CHECK(rep.checks >= rep.instances);
}

TEST_CASE("inserted-variable sweeps preserve the projection") {
  run("u_C", 1, 4, false);
  run("u_ch", 3, 4, false);
  run("adj_2x2c2y", 3, 4, false);
  run("adj_1x1c1y", 2, 4, false);
  run("cor_ix1hiy", 1, 1, true);
  run("adj_2c1c2", 3, 2, false);
  run("adj_1c1c2", 1, 1, true);
}
