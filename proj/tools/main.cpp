// CLI entry point; subcommands are filled in as modules land.
#include <cstdio>

int main() {
  std::puts("spintree: subcommands not wired yet");
  return 2;
}
