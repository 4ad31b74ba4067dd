package org.fixture.index;

import org.apache.logging.log4j.LogManager;
import org.apache.logging.log4j.Logger;

public class IndexBuilder {
    private static final Logger logger = LogManager.getLogger(IndexBuilder.class);

    public void buildIndex(Shard shard) {
        logger.info("Building index for shard {}", shard.id());
        shard.rebuild();
    }
}
