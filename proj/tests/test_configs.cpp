#include <doctest.h>

#include <string>

#include "volcluster/io.hpp"
#include "volcluster/scenario.hpp"

using namespace volcluster;

// The shipped config files must mean exactly what the presets mean.
TEST_CASE("shipped configs parse to the presets") {
  const std::string dir = CONFIG_DIR;
  struct Pair {
    const char* file;
    Preset preset;
  } pairs[] = {
      {"fig2.cfg", Preset::fig2_news},
      {"fig3.cfg", Preset::fig3_constant_value},
      {"kesten.cfg", Preset::kesten_trend},
      {"quiet.cfg", Preset::quiet_control},
  };
  for (const Pair& p : pairs) {
    CAPTURE(p.file);
    ParsedConfig pc = parse_config_file(dir + "/" + p.file);
    CHECK(pc.config == preset_config(p.preset));
    CHECK(pc.runner == RunnerSettings{});
  }
}
