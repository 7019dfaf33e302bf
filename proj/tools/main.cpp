#include <cstdio>

int main() {
  std::puts("yslice: command surface lands with the suite module");
  return 2;
}
