import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    // the browse suite boots the real HTTP service
    testTimeout: 120_000,
    hookTimeout: 120_000,
  },
});
