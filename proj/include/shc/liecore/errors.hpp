#pragma once

#include "shc/exactalg/errors.hpp"

namespace shc {

class TangencyError : public Error {
 public:
  using Error::Error;
};

class NotOnSpace : public Error {
 public:
  using Error::Error;
};

class FamilyFieldIncompatible : public Error {
 public:
  using Error::Error;
};

}  // namespace shc
