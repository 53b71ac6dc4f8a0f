import { ApiClient } from "./api.js";
import { App } from "./app.js";

declare global {
  interface Window {
    ATTENTIONFLOW_API?: string;
  }
}

const base =
  window.ATTENTIONFLOW_API ?? `http://${window.location.hostname || "127.0.0.1"}:8000`;

const app = new App(new ApiClient(base));
void app.start();
