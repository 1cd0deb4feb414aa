import { boot } from "./app.js";

boot(document).catch((error) => {
  const status = document.getElementById("status");
  if (status) status.textContent = String(error);
  console.error(error);
});
