#pragma once

#include <string>
#include <vector>

#include "linkdata.hpp"

namespace hfl {

struct CatalogEntry {
  std::string name;
  std::string summary;
  Document document;
  bool warning_expected = false;  // validate is expected to warn
  bool pipeline_valid = true;     // Alexander data drives the h-function pipeline
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_get(const std::string& name);  // UnknownName on miss

}  // namespace hfl
