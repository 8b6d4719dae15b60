namespace lepoly {}
