#!/usr/bin/env node
import { runFigure } from "../cli.js";

process.exit(runFigure("profiles", process.argv.slice(2)));
